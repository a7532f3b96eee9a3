#pragma once

#include "commutant/matrix.hpp"

#include <utility>

namespace commutant {

// Conjugation of a 2x2 matrix that is non-scalar mod p onto the row-wise
// companion matrix of its characteristic polynomial: g*M*g^-1 = c.
struct CompanionConj {
    Matrix g, ginv, c;
};

CompanionConj companion_conjugator(const Matrix& m);  // throws NotRegularModP

// A = lambda*1 + p^i * A' with lambda = +-1, i maximal, and A' conjugated to
// companion form [[0,1],[a',b']] (non-scalar mod p). The recorded g satisfies
// g*A*g^-1 = lambda*1 + p^i*aprime. det(A) = 1 forces b' in (p).
struct ScalarSplit {
    int lambda;
    int i;
    Matrix aprime;
    Elem a_prime, b_prime;
    Matrix g, ginv;
};

ScalarSplit scalar_split(const Matrix& a);  // throws PrecisionExhausted

enum class GroupCase { scalar_lambda_plus, scalar_lambda_minus, scalar_exact, nonscalar };

const char* group_case_name(GroupCase c);

struct GroupWitness {
    Matrix x, y;
    Elem s;  // trace of y
    GroupCase tag;
    int i;  // valuation used in the scalar-mod-p case, 0 otherwise
    Elem det_x;
};

// x*y*x^-1*y^-1 = A with x in GL_2, y in SL_2 over Z/p^k, p odd.
GroupWitness group_commutator_gl(const Matrix& a);  // throws UnsupportedPrime

// Both x and y in SL_2; requires p >= 5. Free choices are steered so that
// tr(y) is not +-2 mod p, then x is fixed up by a centralizer unit with the
// complementary determinant.
GroupWitness group_commutator_sl(const Matrix& a);  // throws UnsupportedPrime

// c20*a^2 + c11*a*b + c02*b^2 + c10*a + c01*b + c00 over Z/p^k.
struct BivariateQuadratic {
    Ring ring;
    Elem c20, c11, c02, c10, c01, c00;

    Elem eval(const Elem& alpha, const Elem& beta) const;
    Elem d_alpha(const Elem& alpha, const Elem& beta) const;
    Elem d_beta(const Elem& alpha, const Elem& beta) const;
};

// Newton iteration along the coordinate whose partial derivative is a unit,
// from a mod-p zero of F to a mod-p^k zero congruent to the seed mod p.
std::pair<Elem, Elem> hensel_lift2(const BivariateQuadratic& f, const Elem& alpha0,
                                    const Elem& beta0);  // throws SingularSeed

// g = alpha*1 + beta*y with det(g) = r; requires tr(y) != +-2 mod p and r a
// unit. Found by residue enumeration followed by a Hensel lift.
Matrix centralizer_unit_with_det(const Matrix& y, const Elem& r);  // throws BadTrace, NotAUnit

}  // namespace commutant
