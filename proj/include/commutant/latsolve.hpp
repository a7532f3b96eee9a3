#pragma once

#include "commutant/matrix.hpp"

#include <optional>
#include <vector>

namespace commutant {

// Row Hermite form: U*M = H with U unimodular, H in row echelon form with
// positive pivots and entries above each pivot reduced into [0, pivot).
struct HnfResult {
    Matrix H, U;
};

// Smith form: U*M*V = D with U, V unimodular, D diagonal with non-negative
// entries forming a divisibility chain d1 | d2 | ... The inverse transforms
// are tracked alongside, they come out of the reduction for free.
struct SnfResult {
    Matrix D, U, V, Uinv, Vinv;
};

HnfResult hnf(const Matrix& m);  // integer matrices
SnfResult snf(const Matrix& m);  // integer matrices

// Exact solution of M*z = c over the matrix ring, or nullopt when none
// exists. Fields use Gaussian elimination, Z goes through the Smith form,
// Z/p^k lifts to the integer system [M | p^k*1].
std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& c);

// Generators of {z : M*z = 0}: a basis over a field, a lattice basis over Z,
// and over Z/p^k generators that include the p-power torsion directions.
std::vector<Matrix> kernel_basis(const Matrix& m);

// Saturation of the row span: given r rows of full rank r over Q, returns r
// rows spanning {v in Z^n : m*v in rowspace_Q} whose r x r minors have gcd 1.
Matrix saturate(const Matrix& rows);  // throws RankDeficient

// Unimodular n x n matrix whose first r rows are the given saturated rows.
Matrix complete_basis(const Matrix& rows);  // throws NotSaturated

}  // namespace commutant
