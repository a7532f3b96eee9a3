#pragma once

#include "commutant/lrform.hpp"
#include "commutant/matrix.hpp"
#include "commutant/poly.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace commutant {

// The X(x, a) family: first row zero, x down the first column, and the
// row-wise companion matrix of t^{n-1} - a in the lower right block. Always
// trace zero; tr(X^r) = 0 for r <= n-2 and tr(X^{n-1}) = (n-1)a.
struct XGenerator {
    int n;
    std::vector<Elem> x;
    Elem a;
    Matrix X;
    Matrix P;
};

XGenerator build_X(const Ring& ring, const std::vector<Elem>& x, const Elem& a);

// The x with x_r = -m_r, tr(P^r Q) = a12 * m_r, for a trace-zero matrix in
// LR form; then tr(X(x, a12)^r B) = 0 for r = 1..n-1 and x_{n-1} = a11.
std::vector<Elem> xvector(const LRForm& lr);

enum class RegMode { gl, sl };

// gl: {1, X, ..., X^{n-1}} linearly independent. sl: additionally some
// tr(X^i) != 0 for 0 <= i <= n-1. Fields only.
bool is_regular(const Matrix& x, RegMode mode);

// gcd of all n x n minors of the vectorized powers matrix
// [vec 1 | vec X | ... | vec X^{n-1}]; X mod p is gl_n-regular iff p does
// not divide the result, so 1 certifies regularity at every prime.
Int regularity_certificate_allprimes(const Matrix& x);

// tr(X^r A) = 0 for r = 1..n-1.
bool trace_criterion(const Matrix& x, const Matrix& a);

// Y with XY - YX = A (and tr Y = 0 when traceless), as one exact linear
// solve in the entries of Y; nullopt when no solution exists.
std::optional<Matrix> solve_commutator_Y(const Matrix& x, const Matrix& a, bool traceless);

// For rings with n = 0: X the upper shift, Y the weighted subdiagonal, with
// [X, lambda*Y] = lambda*1 and X gl-regular.
std::pair<Matrix, Matrix> scalar_commutator(const Elem& lambda, int n, const Ring& ring);

// The explicit 2x2 formulas over a field; nullopt is the char-2 non-scalar
// obstruction (a theorem, not a failure).
std::optional<std::pair<Matrix, Matrix>> decompose_2x2_field(const Matrix& a);

enum class RegClaim { none, gl, sl };

struct PrimeRegularity {
    Int p;
    bool sl_regular;
};

struct CommutatorCertificate {
    Matrix X, Y;
    Matrix g;     // conjugator with g A g^-1 in reduced form
    Elem d;       // extracted gcd scale (Y includes the factor)
    Int gl_cert;  // Z case: 1 certifies gl-regularity of X at every prime
    RegClaim x_regularity = RegClaim::none;
    std::vector<PrimeRegularity> checked_primes;
};

CommutatorCertificate decompose_field(const Matrix& a);

CommutatorCertificate decompose_pid(const Matrix& a, std::uint64_t seed = 0,
                                    long budget = 1000000, unsigned primes_bound = 100);

// Y in gl_n (no trace constraint); covers n = 2.
CommutatorCertificate decompose_pid_gl(const Matrix& a, std::uint64_t seed = 0,
                                       long budget = 1000000);

}  // namespace commutant
