#include "commutant/verify.hpp"

#include <vector>

namespace commutant {

// Everything in this file re-derives the claimed identities from scratch:
// its own multiplication, powers, rank and minor-gcd routines, so that a bug
// in the construction path cannot silently vouch for itself.
namespace {

using Grid = std::vector<std::vector<Elem>>;

Grid grid_of(const Matrix& m) {
    Grid g(static_cast<size_t>(m.rows()), std::vector<Elem>(static_cast<size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) g[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
    return g;
}

Grid vmul(const Ring& R, const Grid& a, const Grid& b) {
    const size_t n = a.size(), m = b[0].size(), inner = b.size();
    Grid c(n, std::vector<Elem>(m, R.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < inner; ++k)
            for (size_t j = 0; j < m; ++j)
                c[i][j] = R.add(c[i][j], R.mul(a[i][k], b[k][j]));
    return c;
}

Grid vsub(const Ring& R, const Grid& a, const Grid& b) {
    Grid c = a;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c[i].size(); ++j) c[i][j] = R.sub(c[i][j], b[i][j]);
    return c;
}

bool veq(const Grid& a, const Grid& b) { return a == b; }

Elem vtrace(const Ring& R, const Grid& a) {
    Elem t = R.zero();
    for (size_t i = 0; i < a.size(); ++i) t = R.add(t, a[i][i]);
    return t;
}

Grid videntity(const Ring& R, size_t n) {
    Grid g(n, std::vector<Elem>(n, R.zero()));
    for (size_t i = 0; i < n; ++i) g[i][i] = R.one();
    return g;
}

Elem vdet2(const Ring& R, const Grid& a) {
    return R.sub(R.mul(a[0][0], a[1][1]), R.mul(a[0][1], a[1][0]));
}

Grid vinv2(const Ring& R, const Grid& a) {
    Elem di = R.inv(vdet2(R, a));
    Grid g(2, std::vector<Elem>(2));
    g[0][0] = R.mul(a[1][1], di);
    g[0][1] = R.mul(R.neg(a[0][1]), di);
    g[1][0] = R.mul(R.neg(a[1][0]), di);
    g[1][1] = R.mul(a[0][0], di);
    return g;
}

// gcd of all n x n minors of the (n^2) x n powers matrix, via the pivots of
// an integer row echelon form (a deliberately different route from the
// construction side, which goes through the Smith form).
Int vminor_gcd_of_powers(const Grid& x) {
    const size_t n = x.size();
    const Ring Z = Ring::integers();
    std::vector<std::vector<Int>> rows(n * n, std::vector<Int>(n, 0));
    Grid p = videntity(Z, n);
    for (size_t c = 0; c < n; ++c) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) rows[i * n + j][c] = p[i][j].num;
        if (c + 1 < n) p = vmul(Z, p, x);
    }
    // column-by-column gcd elimination; the pivot product is the gcd of all
    // maximal minors up to sign
    Int prod = 1;
    size_t top = 0;
    for (size_t col = 0; col < n; ++col) {
        for (;;) {
            size_t best = rows.size();
            for (size_t i = top; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() ||
                    (rows[i][col] < 0 ? -rows[i][col] : rows[i][col]) <
                        (rows[best][col] < 0 ? -rows[best][col] : rows[best][col]))
                    best = i;
            }
            if (best == rows.size()) return 0;  // rank deficient
            std::swap(rows[top], rows[best]);
            bool clear = true;
            for (size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[top][col];
                for (size_t j = col; j < n; ++j) rows[i][j] -= q * rows[top][j];
                clear = clear && rows[i][col] == 0;
            }
            if (clear) break;
        }
        Int piv = rows[top][col];
        prod *= piv < 0 ? Int(-piv) : piv;
        ++top;
    }
    return prod;
}

bool vsl_regular_mod_p(const Grid& x_int, const Int& p) {
    const Ring F = Ring::prime_field(p);
    const size_t n = x_int.size();
    Grid x(n, std::vector<Elem>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) x[i][j] = F.make(x_int[i][j].num);
    // stack vec(1), vec(X), ..., vec(X^{n-1}) as an (n^2) x n matrix
    Grid m(n * n, std::vector<Elem>(n, F.zero()));
    Grid pw = videntity(F, n);
    bool some_trace = false;
    for (size_t c = 0; c < n; ++c) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m[i * n + j][c] = pw[i][j];
        some_trace = some_trace || !F.is_zero(vtrace(F, pw));
        if (c + 1 < n) pw = vmul(F, pw, x);
    }
    if (!some_trace) return false;  // tr(K[X]) = 0 rules out sl-regularity
    size_t rank = 0;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = m.size();
        for (size_t r = rank; r < m.size(); ++r)
            if (!F.is_zero(m[r][col])) {
                piv = r;
                break;
            }
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        Elem inv = F.inv(m[rank][col]);
        for (size_t j = col; j < n; ++j) m[rank][j] = F.mul(m[rank][j], inv);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank || F.is_zero(m[r][col])) continue;
            Elem f = m[r][col];
            for (size_t j = col; j < n; ++j) m[r][j] = F.sub(m[r][j], F.mul(f, m[rank][j]));
        }
        ++rank;
    }
    return rank == n;
}

const Json& field(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("certificate missing ") + key);
    return j.at(key);
}

void verify_decompose(const Json& doc, VerifyReport& rep) {
    const bool traceless = field(doc, "command").get<std::string>() == "decompose";
    Matrix a = matrix_from_json(field(doc, "input"));
    const Json& cert = field(doc, "certificate");
    Matrix xm = matrix_from_json(field(cert, "X"));
    Matrix ym = matrix_from_json(field(cert, "Y"));
    const Ring& R = a.ring();
    if (!(xm.ring() == R) || !(ym.ring() == R)) throw ParseError("certificate rings disagree");
    if (!a.is_square() || xm.rows() != a.rows() || ym.rows() != a.rows() || !xm.is_square() ||
        !ym.is_square())
        throw ParseError("certificate dimensions disagree");

    Grid ga = grid_of(a), gx = grid_of(xm), gy = grid_of(ym);
    Grid lie = vsub(R, vmul(R, gx, gy), vmul(R, gy, gx));
    rep.check(veq(lie, ga), "XY - YX = A");
    rep.check(R.is_zero(vtrace(R, gx)), "tr(X) = 0");
    if (traceless) rep.check(R.is_zero(vtrace(R, gy)), "tr(Y) = 0");

    if (R.kind() == RingKind::integers) {
        Int claimed(field(cert, "gl_cert").get<std::string>());
        rep.check(vminor_gcd_of_powers(gx) == claimed, "gl_cert matches minor gcd");
        for (const Json& row : field(cert, "sl_regularity")) {
            Int p(field(row, "p").get<std::string>());
            bool claimed_sl = field(row, "sl_regular").get<bool>();
            rep.check(vsl_regular_mod_p(gx, p) == claimed_sl,
                      "sl-regularity mod " + p.str() + " matches");
        }
    }
}

void verify_group(const Json& doc, VerifyReport& rep) {
    const bool sl_variant = field(doc, "variant").get<std::string>() == "sl";
    Matrix a = matrix_from_json(field(doc, "input"));
    const Json& w = field(doc, "witness");
    Matrix xm = matrix_from_json(field(w, "x"));
    Matrix ym = matrix_from_json(field(w, "y"));
    const Ring& R = a.ring();
    if (!R.is_modular()) throw ParseError("group certificate needs a modular ring");
    if (!(xm.ring() == R) || !(ym.ring() == R)) throw ParseError("witness rings disagree");
    if (a.rows() != 2 || a.cols() != 2 || xm.rows() != 2 || ym.rows() != 2)
        throw ParseError("group witness must be 2x2");

    Grid ga = grid_of(a), gx = grid_of(xm), gy = grid_of(ym);
    rep.check(R.is_one(vdet2(R, gy)), "det(y) = 1");
    const bool invertible = R.is_unit(vdet2(R, gx)) && R.is_unit(vdet2(R, gy));
    rep.check(R.is_unit(vdet2(R, gx)), "det(x) is a unit");
    if (invertible) {
        Grid comm = vmul(R, vmul(R, gx, gy), vmul(R, vinv2(R, gx), vinv2(R, gy)));
        rep.check(veq(comm, ga), "x y x^-1 y^-1 = A");
    } else {
        rep.check(false, "x y x^-1 y^-1 = A");
    }
    Elem s = R.parse(field(w, "s").get<std::string>());
    rep.check(s == vtrace(R, gy), "s = tr(y)");
    Elem dx = R.parse(field(w, "det_x").get<std::string>());
    rep.check(dx == vdet2(R, gx), "det_x matches");
    if (sl_variant) {
        rep.check(R.is_one(vdet2(R, gx)), "det(x) = 1");
        Int sp = s.num % R.p();
        rep.check(sp != 2 % R.p() && sp != (R.p() - 2) % R.p(), "tr(y) != +-2 mod p");
    }
}

}  // namespace

VerifyReport verify_certificate(const Json& doc) {
    VerifyReport rep;
    if (!doc.is_object()) throw ParseError("certificate must be a JSON object");
    const std::string cmd = field(doc, "command").get<std::string>();
    if (cmd == "decompose" || cmd == "decompose-gl") {
        verify_decompose(doc, rep);
    } else if (cmd == "group-commutator") {
        verify_group(doc, rep);
    } else {
        throw ParseError("unknown certificate command \"" + cmd + "\"");
    }
    return rep;
}

}  // namespace commutant
