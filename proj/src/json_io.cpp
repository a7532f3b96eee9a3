#include "commutant/json_io.hpp"

#include "commutant/verify.hpp"

namespace commutant {

Json ring_to_json(const Ring& ring) {
    Json j;
    switch (ring.kind()) {
        case RingKind::integers: j["kind"] = "int"; break;
        case RingKind::rationals: j["kind"] = "rat"; break;
        case RingKind::prime_field:
            j["kind"] = "fp";
            j["p"] = ring.p().str();
            break;
        case RingKind::residue_ring:
            j["kind"] = "zpk";
            j["p"] = ring.p().str();
            j["k"] = ring.k();
            break;
    }
    return j;
}

namespace {

Int int_field(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing ring field ") + key);
    const Json& v = j.at(key);
    try {
        if (v.is_string()) return Int(v.get<std::string>());
        if (v.is_number_integer()) return Int(v.get<long long>());
    } catch (const std::runtime_error& e) {
        throw ParseError(std::string("bad ring field ") + key + ": " + e.what());
    }
    throw ParseError(std::string("ring field ") + key + " must be an integer or string");
}

}  // namespace

Ring ring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("ring: missing kind");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "int") return Ring::integers();
        if (kind == "rat") return Ring::rationals();
        if (kind == "fp") return Ring::prime_field(int_field(j, "p"));
        if (kind == "zpk") {
            Int k = int_field(j, "k");
            if (k < 1 || k > 64) throw ParseError("zpk: k out of range");
            return Ring::residue_ring(int_field(j, "p"), static_cast<int>(k));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("bad ring: ") + e.what());
    }
    throw ParseError("unknown ring kind \"" + kind + "\"");
}

Json matrix_to_json(const Matrix& m) {
    Json j;
    j["ring"] = ring_to_json(m.ring());
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.ring().to_string(m.at(i, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("matrix: expected an object");
    for (const char* key : {"ring", "rows", "cols", "entries"})
        if (!j.contains(key)) throw ParseError(std::string("matrix: missing ") + key);
    Ring ring = ring_from_json(j.at("ring"));
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    if (rows < 0 || cols < 0 || rows > 64 || cols > 64)
        throw ParseError("matrix: dimensions out of range");
    const Json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw ParseError("matrix: entries shape mismatch");
    Matrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = entries.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("matrix: entries shape mismatch");
        for (int c = 0; c < cols; ++c) {
            const Json& cell = row.at(static_cast<size_t>(c));
            if (cell.is_number_integer())
                m.set(i, c, ring.make(Int(cell.get<long long>())));
            else if (cell.is_string())
                m.set(i, c, ring.parse(cell.get<std::string>()));
            else
                throw ParseError("matrix: entries must be strings or integers");
        }
    }
    return m;
}

namespace {

Json verification_summary(const Json& doc) {
    VerifyReport rep = verify_certificate(doc);
    Json v;
    v["ok"] = rep.ok;
    v["checks_passed"] = rep.passed;
    v["checks_failed"] = rep.failed;
    return v;
}

const char* claim_name(RegClaim c) {
    switch (c) {
        case RegClaim::none: return "none";
        case RegClaim::gl: return "gl";
        case RegClaim::sl: return "sl";
    }
    return "?";
}

}  // namespace

Json decompose_certificate_json(const Matrix& input, const CommutatorCertificate& cert,
                                bool traceless, std::uint64_t seed) {
    const Ring& R = input.ring();
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = traceless ? "decompose" : "decompose-gl";
    j["seed"] = seed;
    j["input"] = matrix_to_json(input);
    Json c;
    c["X"] = matrix_to_json(cert.X);
    c["Y"] = matrix_to_json(cert.Y);
    c["conjugator"] = matrix_to_json(cert.g);
    c["d"] = R.to_string(cert.d);
    c["gl_cert"] = cert.gl_cert.str();
    c["x_regularity_claim"] = claim_name(cert.x_regularity);
    Json table = Json::array();
    for (const PrimeRegularity& pr : cert.checked_primes) {
        Json row;
        row["p"] = pr.p.str();
        row["sl_regular"] = pr.sl_regular;
        table.push_back(std::move(row));
    }
    c["sl_regularity"] = std::move(table);
    j["certificate"] = std::move(c);
    j["verification"] = verification_summary(j);
    return j;
}

Json group_certificate_json(const Matrix& input, const GroupWitness& w, bool sl_variant,
                            std::uint64_t seed) {
    const Ring& R = input.ring();
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = "group-commutator";
    j["variant"] = sl_variant ? "sl" : "gl";
    j["seed"] = seed;
    j["input"] = matrix_to_json(input);
    Json ws;
    ws["x"] = matrix_to_json(w.x);
    ws["y"] = matrix_to_json(w.y);
    ws["s"] = R.to_string(w.s);
    ws["case"] = group_case_name(w.tag);
    ws["i"] = w.i;
    ws["det_x"] = R.to_string(w.det_x);
    j["witness"] = std::move(ws);
    j["verification"] = verification_summary(j);
    return j;
}

}  // namespace commutant
