#pragma once

#include "commutant/matrix.hpp"

#include <cstdint>
#include <optional>

namespace commutant {

// Scalarity data for an integer matrix: mu is the gcd of all off-diagonal
// entries and diagonal differences, the largest modulus at which the matrix
// is scalar. mu = 0 iff the matrix is scalar; otherwise A = c*1 + mu*B0 with
// B0 non-scalar mod every prime.
struct ScalarityData {
    Int mu;
    Int c;
    std::optional<Matrix> b0;
};

// A matrix certified in Laffey-Reams form: staircase (b_ij = 0 for
// j >= i+2) and b == a11*1 mod (a12), together with the conjugation that
// produced it: b = g * a * g^-1.
struct LRForm {
    Matrix b;
    Matrix g, ginv;
    Elem a11, a12;
};

struct LRPredicate {
    bool ok;
    Elem a11, a12;
};

ScalarityData scalarity_modulus(const Matrix& a);  // integer matrices

// Flag reduction over a field; the result has a11 = 0, a12 = 1.
LRForm staircase_reduce_field(const Matrix& a);  // throws ScalarInput, NotAField

// Laffey-Reams reduction over Z via a saturated flag; the result has
// a12 = mu(a) and a11 = c mod mu. The primitive-vector search enumerates
// deterministically by sup-norm, interleaving random candidates after norm 3.
LRForm lr_reduce_int(const Matrix& a, std::uint64_t seed = 0, long budget = 1000000);

LRPredicate is_lr_form(const Matrix& a);

}  // namespace commutant
