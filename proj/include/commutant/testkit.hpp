#pragma once

#include "commutant/matrix.hpp"

#include <random>
#include <vector>

// Deterministic generators and brute-force oracles shared by the selftest
// harness, the acceptance suite and the unit tests.
namespace commutant::testkit {

using Rng = std::mt19937_64;

inline long rand_long(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Matrix random_matrix(Rng& rng, const Ring& ring, int rows, int cols, long lo, long hi) {
    Matrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, ring.make(Int(rand_long(rng, lo, hi))));
    return m;
}

inline Matrix random_trace_zero(Rng& rng, const Ring& ring, int n, long lo, long hi) {
    Matrix m = random_matrix(rng, ring, n, n, lo, hi);
    Elem s = ring.zero();
    for (int i = 0; i + 1 < n; ++i) s = ring.add(s, m.at(i, i));
    m.set(n - 1, n - 1, ring.neg(s));
    return m;
}

// Product of `ops` random elementary matrices (swaps, sign flips, shears
// with small coefficients); always unimodular.
inline Matrix random_unimodular(Rng& rng, int n, int ops) {
    const Ring z = Ring::integers();
    Matrix g = Matrix::identity(z, n);
    for (int t = 0; t < ops; ++t) {
        Matrix e = Matrix::identity(z, n);
        int i = static_cast<int>(rand_long(rng, 0, n - 1));
        int j = static_cast<int>(rand_long(rng, 0, n - 1));
        switch (rand_long(rng, 0, 2)) {
            case 0:
                if (i != j) {
                    e.set(i, i, z.zero());
                    e.set(j, j, z.zero());
                    e.set(i, j, z.one());
                    e.set(j, i, z.make(-1));
                }
                break;
            case 1: e.set(i, i, z.make(-1)); break;
            default:
                if (i != j) e.set(i, j, z.make(Int(rand_long(rng, -3, 3))));
                break;
        }
        g = g * e;
    }
    return g;
}

// Random element of SL_2(Z/p^k) as a product of shears, with occasional
// scalar and scalar-mod-p shapes mixed in so every witness case gets hit.
inline Matrix random_sl2(Rng& rng, const Ring& ring) {
    const Int& p = ring.p();
    const int k = ring.k();
    auto shear_product = [&](const Int& step) {
        Matrix m = Matrix::identity(ring, 2);
        int rounds = static_cast<int>(rand_long(rng, 2, 6));
        for (int t = 0; t < rounds; ++t) {
            Matrix s = Matrix::identity(ring, 2);
            Int coeff = Int(rand_long(rng, 0, 1000)) * step;
            if (rand_long(rng, 0, 1))
                s.set(0, 1, ring.make(coeff));
            else
                s.set(1, 0, ring.make(coeff));
            m = m * s;
        }
        return m;
    };
    long mode = rand_long(rng, 0, 9);
    Elem sign = rand_long(rng, 0, 1) ? ring.one() : ring.neg(ring.one());
    if (mode <= 5) return shear_product(1).scaled(sign);
    if (mode <= 8 && k >= 2) {
        // scalar mod p^i but usually not scalar
        int i = static_cast<int>(rand_long(rng, 1, k - 1));
        return shear_product(pow_int(p, static_cast<unsigned>(i))).scaled(sign);
    }
    return Matrix::identity(ring, 2).scaled(sign);
}

namespace detail {
inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
    for (;;) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++cur[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)] + 1;
    }
    return out;
}
}  // namespace detail

// gcd of all k x k minors by straight enumeration with cofactor
// determinants (the oracle route; the library itself goes through normal
// forms).
inline Int minor_gcd(const Matrix& m, int k) {
    Int g = 0;
    for (const auto& rs : detail::subsets(m.rows(), k))
        for (const auto& cs : detail::subsets(m.cols(), k)) {
            Matrix sub(m.ring(), k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub.set(i, j, m.at(rs[static_cast<size_t>(i)], cs[static_cast<size_t>(j)]));
            g = gcd_nonneg(g, det_cofactor(sub).num);
            if (g == 1) return g;
        }
    return g;
}

// All trace-zero n x n matrices over a small prime field.
inline std::vector<Matrix> all_sl_n(const Ring& field, int n) {
    const long q = field.p().convert_to<long>();
    std::vector<Matrix> out;
    const int free_cells = n * n - 1;  // last diagonal entry is determined
    std::vector<long> digits(static_cast<size_t>(free_cells), 0);
    for (;;) {
        Matrix m(field, n, n);
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == n - 1 && j == n - 1) continue;
                m.set(i, j, field.make(Int(digits[static_cast<size_t>(idx++)])));
            }
        Elem s = field.zero();
        for (int i = 0; i + 1 < n; ++i) s = field.add(s, m.at(i, i));
        m.set(n - 1, n - 1, field.neg(s));
        out.push_back(std::move(m));
        int pos = free_cells - 1;
        while (pos >= 0 && digits[static_cast<size_t>(pos)] == q - 1) {
            digits[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++digits[static_cast<size_t>(pos)];
    }
    return out;
}

// All of SL_2 over Z/p (k = 1).
inline std::vector<Matrix> all_sl2_group(const Ring& ring) {
    const long q = ring.modulus().convert_to<long>();
    std::vector<Matrix> out;
    for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b)
            for (long c = 0; c < q; ++c)
                for (long d = 0; d < q; ++d) {
                    if (((a * d - b * c) % q + q) % q != 1 % q) continue;
                    out.push_back(Matrix::from_ints(ring, {{a, b}, {c, d}}));
                }
    return out;
}

}  // namespace commutant::testkit
