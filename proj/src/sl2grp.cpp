#include "commutant/sl2grp.hpp"

#include "commutant/poly.hpp"

#include <utility>

namespace commutant {

namespace {

void require_modular_2x2(const Matrix& m, const char* what) {
    if (!m.ring().is_modular()) throw RingMismatch(std::string(what) + " needs Z/p^k");
    if (m.rows() != 2 || m.cols() != 2) throw DimensionMismatch(what);
}

Elem det2(const Matrix& m) {
    const Ring& R = m.ring();
    return R.sub(R.mul(m.at(0, 0), m.at(1, 1)), R.mul(m.at(0, 1), m.at(1, 0)));
}

bool scalar_mod_p(const Matrix& m) {
    return m.mapped(Ring::prime_field(m.ring().p())).is_scalar();
}

void require_sl2(const Matrix& m, const char* what) {
    require_modular_2x2(m, what);
    if (!m.ring().is_one(det2(m))) throw Error(std::string(what) + ": determinant must be 1");
}

Matrix group_commutator_product(const Matrix& x, const Matrix& y) {
    return x * y * inverse(x) * inverse(y);
}

// y = [[y11, 1], [y11*y22 - 1, y22]], the det-1 completion of the regular
// corner shape.
Matrix corner_y(const Ring& R, const Elem& y11, const Elem& y22) {
    Matrix y(R, 2, 2);
    y.set(0, 0, y11);
    y.set(0, 1, R.one());
    y.set(1, 0, R.sub(R.mul(y11, y22), R.one()));
    y.set(1, 1, y22);
    return y;
}

// x with x*y*x^-1 = a*y, via the common companion form of y and a*y; valid
// once tr(a*y) = tr(y) and both are regular mod p.
Matrix intertwiner(const Matrix& a, const Matrix& y) {
    CompanionConj cy = companion_conjugator(y);
    CompanionConj cay = companion_conjugator(a * y);
    if (!(cy.c == cay.c))
        throw InternalInvariantViolation("y and Ay do not share a companion form");
    return cay.ginv * cy.g;
}

GroupWitness finish_witness(const Matrix& a, Matrix x, Matrix y, GroupCase tag, int i) {
    const Ring& R = a.ring();
    if (!(group_commutator_product(x, y) == a))
        throw InternalInvariantViolation("group witness failed verification");
    if (!R.is_one(det2(y))) throw InternalInvariantViolation("det(y) != 1");
    Elem s = y.trace();
    Elem dx = det2(x);
    return GroupWitness{std::move(x), std::move(y), std::move(s), tag, i, std::move(dx)};
}

}  // namespace

const char* group_case_name(GroupCase c) {
    switch (c) {
        case GroupCase::scalar_lambda_plus: return "scalar-lambda-plus";
        case GroupCase::scalar_lambda_minus: return "scalar-lambda-minus";
        case GroupCase::scalar_exact: return "scalar-exact";
        case GroupCase::nonscalar: return "nonscalar";
    }
    return "?";
}

CompanionConj companion_conjugator(const Matrix& m) {
    require_modular_2x2(m, "companion_conjugator");
    const Ring& R = m.ring();
    // cyclic row vector: one of e1, e2, e1+e2 works mod p iff m is
    // non-scalar mod p
    for (int pick = 0; pick < 3; ++pick) {
        Matrix v(R, 1, 2);
        if (pick == 0 || pick == 2) v.set(0, 0, R.one());
        if (pick == 1 || pick == 2) v.set(0, 1, R.one());
        Matrix g(R, 2, 2);
        g.set_block(0, 0, v);
        g.set_block(1, 0, v * m);
        if (!R.is_unit(det2(g))) continue;
        Matrix ginv = inverse(g);
        Matrix c = g * m * ginv;
        return CompanionConj{std::move(g), std::move(ginv), std::move(c)};
    }
    throw NotRegularModP("companion_conjugator: matrix is scalar mod p");
}

ScalarSplit scalar_split(const Matrix& a) {
    require_sl2(a, "scalar_split");
    const Ring& R = a.ring();
    const Int& p = R.p();
    if (p == 2) throw UnsupportedPrime("scalar_split needs p odd");
    if (!scalar_mod_p(a)) throw Error("scalar_split: input is not scalar mod p");

    Int diag = a.at(0, 0).num % p;
    int lambda;
    if (diag == 1) lambda = 1;
    else if (diag == p - 1) lambda = -1;
    else throw InternalInvariantViolation("scalar mod p with det 1 must reduce to +-1");

    Matrix diff = a - Matrix::scalar(R, 2, R.make(lambda));
    if (diff.is_zero())
        throw PrecisionExhausted("A = lambda*1 exactly; use the scalar-exact case");
    int i = R.k();
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (!R.is_zero(diff.at(r, c))) i = std::min(i, valuation(diff.at(r, c).num, p));
    if (i < 1) throw InternalInvariantViolation("valuation of A - lambda*1 must be >= 1");

    const Int pi = pow_int(p, static_cast<unsigned>(i));
    Matrix aprime0(R, 2, 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) aprime0.set(r, c, R.make(diff.at(r, c).num / pi));
    if (scalar_mod_p(aprime0))
        throw InternalInvariantViolation("A' must be non-scalar mod p at the maximal valuation");

    CompanionConj cc = companion_conjugator(aprime0);
    Elem a_prime = R.neg(det2(aprime0));  // companion row is (-det, tr)
    Elem b_prime = aprime0.trace();
    if (b_prime.num % p != 0)
        throw InternalInvariantViolation("det(A) = 1 forces b' in (p)");
    return ScalarSplit{lambda, i, cc.c, std::move(a_prime), std::move(b_prime),
                       std::move(cc.g), std::move(cc.ginv)};
}

Elem BivariateQuadratic::eval(const Elem& alpha, const Elem& beta) const {
    const Ring& R = ring;
    Elem v = R.mul(c20, R.mul(alpha, alpha));
    v = R.add(v, R.mul(c11, R.mul(alpha, beta)));
    v = R.add(v, R.mul(c02, R.mul(beta, beta)));
    v = R.add(v, R.mul(c10, alpha));
    v = R.add(v, R.mul(c01, beta));
    return R.add(v, c00);
}

Elem BivariateQuadratic::d_alpha(const Elem& alpha, const Elem& beta) const {
    const Ring& R = ring;
    return R.add(R.add(R.mul(R.make(2), R.mul(c20, alpha)), R.mul(c11, beta)), c10);
}

Elem BivariateQuadratic::d_beta(const Elem& alpha, const Elem& beta) const {
    const Ring& R = ring;
    return R.add(R.add(R.mul(R.make(2), R.mul(c02, beta)), R.mul(c11, alpha)), c01);
}

std::pair<Elem, Elem> hensel_lift2(const BivariateQuadratic& f, const Elem& alpha0,
                                   const Elem& beta0) {
    const Ring& R = f.ring;
    if (!R.is_modular()) throw RingMismatch("hensel_lift2 needs Z/p^k");
    const Int& p = R.p();
    if (f.eval(alpha0, beta0).num % p != 0)
        throw SingularSeed("hensel_lift2: seed is not a zero mod p");
    const bool along_alpha = f.d_alpha(alpha0, beta0).num % p != 0;
    if (!along_alpha && f.d_beta(alpha0, beta0).num % p == 0)
        throw SingularSeed("hensel_lift2: gradient vanishes mod p");

    Elem alpha = alpha0, beta = beta0;
    for (int it = 0; it <= R.k() + 1; ++it) {
        Elem val = f.eval(alpha, beta);
        if (R.is_zero(val)) return {alpha, beta};
        if (along_alpha) {
            alpha = R.sub(alpha, R.mul(val, R.inv(f.d_alpha(alpha, beta))));
        } else {
            beta = R.sub(beta, R.mul(val, R.inv(f.d_beta(alpha, beta))));
        }
    }
    throw InternalInvariantViolation("hensel_lift2 failed to converge");
}

Matrix centralizer_unit_with_det(const Matrix& y, const Elem& r) {
    require_modular_2x2(y, "centralizer_unit_with_det");
    const Ring& R = y.ring();
    const Int& p = R.p();
    if (!R.is_unit(r)) throw NotAUnit("centralizer_unit_with_det: target determinant");
    Elem s = y.trace();
    Int sp = s.num % p;
    if (sp == 2 % p || sp == (p - 2) % p)
        throw BadTrace("centralizer_unit_with_det: tr(y) = +-2 mod p");
    if (!R.is_one(det2(y)))
        throw Error("centralizer_unit_with_det: det(y) must be 1");

    // det(alpha*1 + beta*y) = alpha^2 + alpha*beta*s + beta^2 when det(y)=1
    BivariateQuadratic f{R, R.one(), s, R.one(), R.zero(), R.zero(), R.neg(r)};
    for (Int a = 0; a < p; ++a)
        for (Int b = 0; b < p; ++b) {
            Elem ea = R.make(a), eb = R.make(b);
            if (f.eval(ea, eb).num % p != 0) continue;
            auto [alpha, beta] = hensel_lift2(f, ea, eb);
            Matrix g = Matrix::scalar(R, 2, alpha) + y.scaled(beta);
            if (!(det2(g) == r) || !(g * y == y * g))
                throw InternalInvariantViolation("centralizer unit failed verification");
            return g;
        }
    throw InternalInvariantViolation("norm map must be surjective onto units");
}

namespace {

// Shared machinery: given the frame matrix Ac (equal to A up to recorded
// conjugation) and y with tr(y*Ac) = tr(y), produce the witness in the frame
// of Ac and pull it back through (g, ginv).
GroupWitness conjugated_witness(const Matrix& a, const Matrix& ac, const Matrix& yc,
                                const Matrix& g, const Matrix& ginv, GroupCase tag, int i) {
    Matrix xc = intertwiner(ac, yc);
    return finish_witness(a, ginv * xc * g, ginv * yc * g, tag, i);
}

GroupWitness commutator_witness(const Matrix& a, bool steer_sl) {
    const Ring& R = a.ring();
    const Int& p = R.p();

    // exact scalar: A = +-1
    if (a == Matrix::identity(R, 2) || a == -Matrix::identity(R, 2)) {
        Matrix y = Matrix::from_ints(R, {{0, 1}, {-1, 0}});
        Matrix x = a.at(0, 0) == R.one() ? Matrix::identity(R, 2)
                                         : Matrix::from_ints(R, {{1, 0}, {0, -1}});
        return finish_witness(a, std::move(x), std::move(y), GroupCase::scalar_exact, 0);
    }

    if (scalar_mod_p(a)) {
        ScalarSplit sp = scalar_split(a);
        const Matrix ac = sp.g * a * sp.ginv;  // lambda*1 + p^i * aprime
        const Elem pi = R.make(pow_int(p, static_cast<unsigned>(sp.i)));
        Elem y11, y22;
        if (sp.lambda == 1) {
            if (!steer_sl) {
                y11 = R.sub(R.sub(R.one(), sp.a_prime), sp.b_prime);  // -a'-b'+1
                y22 = R.one();
            } else {
                // residue sweep for F = y11*y22 + y22*b' + a' - 1 with
                // s = y11 + y22 != +-2 mod p and a liftable gradient
                BivariateQuadratic f{R,        R.zero(),   R.one(),
                                     R.zero(), R.zero(),   sp.b_prime,
                                     R.sub(sp.a_prime, R.one())};
                bool done = false;
                for (Int av = 0; av < p && !done; ++av)
                    for (Int bv = 0; bv < p && !done; ++bv) {
                        Elem ea = R.make(av), eb = R.make(bv);
                        if (f.eval(ea, eb).num % p != 0) continue;
                        Int s = (av + bv) % p;
                        if (s == 2 % p || s == (p - 2) % p) continue;
                        if (f.d_alpha(ea, eb).num % p == 0 && f.d_beta(ea, eb).num % p == 0)
                            continue;
                        std::tie(y11, y22) = hensel_lift2(f, ea, eb);
                        done = true;
                    }
                if (!done)
                    throw InternalInvariantViolation(
                        "residue field with > 3 elements admits a steered seed");
            }
            return conjugated_witness(a, ac, corner_y(R, y11, y22), sp.g, sp.ginv,
                                      GroupCase::scalar_lambda_plus, sp.i);
        }
        // lambda = -1: the y11 coefficient lambda - 1 + p^i*y22 = p^i*y22 - 2
        // is a unit; y22 = 0 gives s = y11 = p^i*(a'-1)/2, zero mod p
        y22 = R.zero();
        Elem coeff = R.sub(R.mul(pi, y22), R.make(2));
        Elem rhs = R.neg(R.add(R.mul(y22, R.add(R.make(-2), R.mul(pi, sp.b_prime))),
                               R.mul(pi, R.sub(sp.a_prime, R.one()))));
        y11 = R.div(rhs, coeff);
        return conjugated_witness(a, ac, corner_y(R, y11, y22), sp.g, sp.ginv,
                                  GroupCase::scalar_lambda_minus, sp.i);
    }

    // non-scalar mod p: conjugate A to [[0,1],[-1,b]]
    CompanionConj cc = companion_conjugator(a);
    const Elem b = cc.c.at(1, 1);
    Elem y22, y11;
    bool picked = false;
    for (Int t = 2; t < p && !picked; ++t) {
        // t and t-1 are units by the range; steer s away from +-2 if asked
        y22 = R.make(t);
        y11 = R.div(R.add(R.mul(y22, R.sub(R.one(), b)), R.make(2)), R.sub(y22, R.one()));
        if (steer_sl) {
            Int s = (y11.num + y22.num) % p;
            if (s == 2 % p || s == (p - 2) % p) continue;
        }
        picked = true;
    }
    if (!picked)
        throw InternalInvariantViolation("no admissible y22 residue; p >= 5 guarantees one");
    return conjugated_witness(a, cc.c, corner_y(R, y11, y22), cc.g, cc.ginv,
                              GroupCase::nonscalar, 0);
}

}  // namespace

GroupWitness group_commutator_gl(const Matrix& a) {
    require_sl2(a, "group_commutator_gl");
    if (a.ring().p() == 2) throw UnsupportedPrime("group_commutator_gl needs p >= 3");
    return commutator_witness(a, false);
}

GroupWitness group_commutator_sl(const Matrix& a) {
    require_sl2(a, "group_commutator_sl");
    const Ring& R = a.ring();
    const Int& p = R.p();
    if (p < 5) throw UnsupportedPrime("group_commutator_sl needs p >= 5");
    GroupWitness w = commutator_witness(a, true);
    if (!R.is_one(w.det_x)) {
        Matrix gc = centralizer_unit_with_det(w.y, R.inv(w.det_x));
        Matrix x = w.x * gc;
        w = finish_witness(a, std::move(x), std::move(w.y), w.tag, w.i);
    }
    Int sp = w.s.num % p;
    if (sp == 2 % p || sp == (p - 2) % p)
        throw InternalInvariantViolation("sl witness must avoid traces +-2 mod p");
    if (!R.is_one(w.det_x)) throw InternalInvariantViolation("det(x) must be 1");
    return w;
}

}  // namespace commutant
