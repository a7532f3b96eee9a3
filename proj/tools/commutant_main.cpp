#include "commutant/commute.hpp"
#include "commutant/json_io.hpp"
#include "commutant/selftest.hpp"
#include "commutant/sl2grp.hpp"
#include "commutant/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace commutant;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitObstruction = 2;
constexpr int kExitInputError = 3;
constexpr int kExitUnsupportedPrime = 4;
constexpr int kExitInternal = 10;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const Json& doc) {
    if (path.empty() || path == "-") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file " + path);
    out << doc.dump(2) << "\n";
}

Json parse_json(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed JSON input");
    return doc;
}

struct RingFlags {
    std::string ring;
    long long p = 0;
    int k = 0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--ring", ring, "expected ring kind: int, rat, fp or zpk");
        cmd->add_option("--p", p, "expected prime (fp / zpk rings)");
        cmd->add_option("--k", k, "expected precision exponent (zpk rings)");
    }

    // the matrix JSON is authoritative; flags, when given, must agree
    void check_against(const Ring& actual) const {
        if (!ring.empty()) {
            std::string kind = ring_to_json(actual).at("kind").get<std::string>();
            if (kind != ring) throw ParseError("--ring " + ring + " does not match input ring");
        }
        if (p != 0 && (!actual.is_modular() || actual.p() != p))
            throw ParseError("--p does not match input ring");
        if (k != 0 && actual.k() != k) throw ParseError("--k does not match input ring");
    }
};

int run_decompose(const std::string& in_path, const std::string& out_path, const RingFlags& rf,
                  bool traceless, std::uint64_t seed, long budget, unsigned primes_bound) {
    Matrix a = matrix_from_json(parse_json(read_input(in_path)));
    rf.check_against(a.ring());
    const Ring& R = a.ring();

    if (!traceless) {
        if (R.kind() != RingKind::integers)
            throw ParseError("decompose-gl works over the integers; use decompose for fields");
        CommutatorCertificate cert = decompose_pid_gl(a, seed, budget);
        write_output(out_path, decompose_certificate_json(a, cert, false, seed));
        return kExitOk;
    }

    switch (R.kind()) {
        case RingKind::integers: {
            if (a.rows() == 2)
                throw ParseError("2x2 over Z is covered by decompose-gl (Y need not be traceless)");
            CommutatorCertificate cert = decompose_pid(a, seed, budget, primes_bound);
            write_output(out_path, decompose_certificate_json(a, cert, true, seed));
            return kExitOk;
        }
        case RingKind::rationals:
        case RingKind::prime_field: {
            if (a.rows() == 2) {
                auto xy = decompose_2x2_field(a);
                if (!xy) {
                    Json j;
                    j["tool"] = kToolName;
                    j["version"] = kToolVersion;
                    j["command"] = "decompose";
                    j["obstruction"] =
                        "non-scalar trace-zero 2x2 matrices in characteristic 2 are not "
                        "commutators of trace-zero matrices";
                    j["input"] = matrix_to_json(a);
                    write_output(out_path, j);
                    return kExitObstruction;
                }
                CommutatorCertificate cert{xy->first,
                                           xy->second,
                                           Matrix::identity(R, 2),
                                           R.one(),
                                           Int(0),
                                           a.is_zero() ? RegClaim::none : RegClaim::gl,
                                           {}};
                write_output(out_path, decompose_certificate_json(a, cert, true, seed));
                return kExitOk;
            }
            CommutatorCertificate cert = decompose_field(a);
            write_output(out_path, decompose_certificate_json(a, cert, true, seed));
            return kExitOk;
        }
        case RingKind::residue_ring:
            throw ParseError("decompose expects int, rat or fp rings");
    }
    return kExitInternal;
}

int run_group(const std::string& in_path, const std::string& out_path, const RingFlags& rf,
              const std::string& variant, std::uint64_t seed) {
    Matrix a = matrix_from_json(parse_json(read_input(in_path)));
    rf.check_against(a.ring());
    if (!a.ring().is_modular()) throw ParseError("group-commutator expects a zpk ring");
    const bool sl = variant != "gl";
    GroupWitness w = sl ? group_commutator_sl(a) : group_commutator_gl(a);
    write_output(out_path, group_certificate_json(a, w, sl, seed));
    return kExitOk;
}

int run_verify(const std::string& in_path) {
    Json doc = parse_json(read_input(in_path));
    VerifyReport rep = verify_certificate(doc);
    for (const std::string& c : rep.passed) std::cout << "pass: " << c << "\n";
    for (const std::string& c : rep.failed) std::cout << "FAIL: " << c << "\n";
    std::cout << (rep.ok ? "certificate OK" : "certificate REJECTED") << "\n";
    return rep.ok ? kExitOk : kExitVerifyFailed;
}

int run_selftest_cmd(std::uint64_t seed, const std::string& budget, bool serial) {
    SelftestOptions opt;
    opt.seed = seed;
    opt.scale = budget == "small" ? 0.2 : 1.0;
    opt.parallel = !serial;
    auto results = run_selftest(opt);
    long total_cases = 0, total_failures = 0;
    for (const SuiteResult& r : results) {
        total_cases += r.cases;
        total_failures += r.failures;
        std::printf("%-40s %6ld cases  %4ld failed  %8.3fs%s%s\n", r.name.c_str(), r.cases,
                    r.failures, r.seconds, r.first_error.empty() ? "" : "  first: ",
                    r.first_error.c_str());
    }
    std::printf("selftest: %ld/%ld cases passed\n", total_cases - total_failures, total_cases);
    return all_passed(results) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"commutant: trace-zero matrix commutator decompositions with certificates"};
    app.require_subcommand(1);

    std::string in_path = "-";
    std::string out_path;
    std::uint64_t seed = 0;
    long budget = 1000000;
    unsigned primes_bound = 100;
    std::string variant = "sl";
    std::string budget_name = "full";
    bool serial = false;
    RingFlags rf;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--in", in_path, "input JSON path, or - for stdin");
        cmd->add_option("--out", out_path, "output path; stdout by default");
        cmd->add_option("--seed", seed, "seed for randomized searches");
    };

    CLI::App* dec = app.add_subcommand("decompose", "A = XY - YX with X, Y trace zero");
    add_io(dec);
    rf.add_to(dec);
    dec->add_option("--budget", budget, "candidate budget for the primitive-vector search");
    dec->add_option("--primes-bound", primes_bound, "check sl-regularity at primes up to this");

    CLI::App* dgl = app.add_subcommand("decompose-gl", "A = XY - YX with X trace zero (Y free)");
    add_io(dgl);
    rf.add_to(dgl);
    dgl->add_option("--budget", budget, "candidate budget for the primitive-vector search");

    CLI::App* grp = app.add_subcommand("group-commutator", "A = x y x^-1 y^-1 in SL_2(Z/p^k)");
    add_io(grp);
    rf.add_to(grp);
    grp->add_option("--variant", variant, "sl (default) or gl")
        ->check(CLI::IsMember({"sl", "gl"}));

    CLI::App* ver = app.add_subcommand("verify", "independently re-check a certificate");
    ver->add_option("--in", in_path, "certificate JSON path, or - for stdin");

    CLI::App* st = app.add_subcommand("selftest", "run the property-test suites");
    st->add_option("--seed", seed, "base seed for all suites");
    st->add_option("--budget", budget_name, "full (default) or small")
        ->check(CLI::IsMember({"full", "small"}));
    st->add_flag("--serial", serial, "run the serial reference driver instead of OpenMP");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dec->parsed())
            return run_decompose(in_path, out_path, rf, true, seed, budget, primes_bound);
        if (dgl->parsed()) return run_decompose(in_path, out_path, rf, false, seed, budget, 0);
        if (grp->parsed()) return run_group(in_path, out_path, rf, variant, seed);
        if (ver->parsed()) return run_verify(in_path);
        if (st->parsed()) return run_selftest_cmd(seed, budget_name, serial);
    } catch (const UnsupportedPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupportedPrime;
    } catch (const InternalInvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInternal;
}
