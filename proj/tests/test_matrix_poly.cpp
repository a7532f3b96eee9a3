#include "commutant/matrix.hpp"
#include "commutant/poly.hpp"
#include "commutant/testkit.hpp"

#include <doctest.h>

#include <functional>
#include <vector>

using namespace commutant;

namespace {

// Independent oracle: det(x*1 - M) by cofactor expansion over Z[x], using
// Poly arithmetic only (no Berkowitz anywhere in this path).
Poly charpoly_cofactor_oracle(const Matrix& m) {
    const Ring& R = m.ring();
    const int n = m.rows();
    std::vector<std::vector<Poly>> a(static_cast<size_t>(n),
                                     std::vector<Poly>(static_cast<size_t>(n), Poly(R)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Elem> c{R.neg(m.at(i, j))};
            if (i == j) c.push_back(R.one());
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Poly(R, std::move(c));
        }
    // recursive expansion along the first row
    std::function<Poly(const std::vector<std::vector<Poly>>&)> det =
        [&](const std::vector<std::vector<Poly>>& g) -> Poly {
        const size_t k = g.size();
        if (k == 1) return g[0][0];
        Poly acc(R);
        for (size_t j = 0; j < k; ++j) {
            std::vector<std::vector<Poly>> sub;
            for (size_t i = 1; i < k; ++i) {
                std::vector<Poly> row;
                for (size_t c = 0; c < k; ++c)
                    if (c != j) row.push_back(g[i][c]);
                sub.push_back(std::move(row));
            }
            Poly term = g[0][j] * det(sub);
            acc = j % 2 == 0 ? acc + term : acc - term;
        }
        return acc;
    };
    return det(a);
}

}  // namespace

TEST_CASE("charpoly of the 2x2 companion block is x^2 - a") {
    Ring z = Ring::integers();
    Matrix m = Matrix::from_ints(z, {{0, 1}, {5, 0}});
    CHECK(charpoly(m) == Poly::from_ints(z, {-5, 0, 1}));
}

TEST_CASE("charpoly of the identity over F_3") {
    Ring f3 = Ring::prime_field(3);
    Matrix m = Matrix::identity(f3, 2);
    CHECK(charpoly(m) == Poly::from_ints(f3, {1, 1, 1}));  // (x-1)^2 mod 3
}

TEST_CASE("charpoly agrees with the cofactor-expansion oracle") {
    testkit::Rng rng(2024);
    Ring z = Ring::integers();
    for (int t = 0; t < 50; ++t) {
        int n = 1 + static_cast<int>(testkit::rand_long(rng, 0, 3));
        Matrix m = testkit::random_matrix(rng, z, n, n, -9, 9);
        CHECK(charpoly(m) == charpoly_cofactor_oracle(m));
    }
    Ring f7 = Ring::prime_field(7);
    for (int t = 0; t < 20; ++t) {
        Matrix m = testkit::random_matrix(rng, f7, 3, 3, 0, 6);
        CHECK(charpoly(m) == charpoly_cofactor_oracle(m));
    }
}

TEST_CASE("charpoly works with zero divisors") {
    Ring z9 = Ring::residue_ring(3, 2);
    testkit::Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        Matrix m = testkit::random_matrix(rng, z9, 3, 3, 0, 8);
        CHECK(charpoly(m) == charpoly_cofactor_oracle(m));
    }
}

TEST_CASE("companion matrices round-trip") {
    Ring z = Ring::integers();
    CHECK(companion(Poly::from_ints(z, {-7, 0, 1})) == Matrix::from_ints(z, {{0, 1}, {7, 0}}));
    CHECK(companion(Poly::from_ints(z, {-3, 1})) == Matrix::from_ints(z, {{3}}));
    Matrix c = companion(Poly::from_ints(z, {1, -2, 0, 1}));
    CHECK(c == Matrix::from_ints(z, {{0, 1, 0}, {0, 0, 1}, {-1, 2, 0}}));
    CHECK(charpoly(c) == Poly::from_ints(z, {1, -2, 0, 1}));
    CHECK_THROWS_AS(companion(Poly::from_ints(z, {1, 2})), NotMonic);
    CHECK_THROWS_AS(companion(Poly::from_ints(z, {5})), NotMonic);
}

TEST_CASE("trace and determinant read off the characteristic polynomial") {
    testkit::Rng rng(99);
    Ring z = Ring::integers();
    for (int t = 0; t < 30; ++t) {
        int n = 1 + static_cast<int>(testkit::rand_long(rng, 0, 5));
        Matrix m = testkit::random_matrix(rng, z, n, n, -9, 9);
        Poly f = charpoly(m);
        CHECK(z.neg(f.coeff(n - 1)) == m.trace());
        Int sign = n % 2 == 0 ? 1 : -1;
        CHECK(f.coeff(0).num == sign * det_bareiss(m));
        CHECK(det_bareiss(m) == det_cofactor(m).num);
    }
}

TEST_CASE("matrix inverse via adjugate") {
    Ring z = Ring::integers();
    Matrix g = Matrix::from_ints(z, {{2, 3}, {1, 2}});  // det 1
    CHECK(inverse(g) * g == Matrix::identity(z, 2));
    CHECK_THROWS_AS(inverse(Matrix::from_ints(z, {{2, 0}, {0, 1}})), NotAUnit);

    Ring z25 = Ring::residue_ring(5, 2);
    Matrix h = Matrix::from_ints(z25, {{1, 1}, {0, 1}});
    CHECK(inverse(h) * h == Matrix::identity(z25, 2));

    Ring q = Ring::rationals();
    Matrix r = Matrix::from_ints(q, {{2, 0}, {0, 3}});
    CHECK(r * inverse(r) == Matrix::identity(q, 2));
}

TEST_CASE("square-only operations reject rectangles") {
    Ring z = Ring::integers();
    Matrix m(z, 2, 3);
    CHECK_THROWS_AS(m.trace(), NonSquare);
    CHECK_THROWS_AS(charpoly(m), NonSquare);
    CHECK_THROWS_AS(m.pow(2), NonSquare);
    CHECK_THROWS_AS(Matrix(z, 2, 2) * Matrix(z, 3, 2), DimensionMismatch);
    Ring f5 = Ring::prime_field(5);
    CHECK_THROWS_AS(Matrix(z, 2, 2) + Matrix(f5, 2, 2), RingMismatch);
}

TEST_CASE("ring mapping reduces and lifts entries") {
    Ring z = Ring::integers();
    Ring f5 = Ring::prime_field(5);
    Matrix m = Matrix::from_ints(z, {{-1, 7}, {10, 3}});
    CHECK(m.mapped(f5) == Matrix::from_ints(f5, {{4, 2}, {0, 3}}));
    Ring z25 = Ring::residue_ring(5, 2);
    CHECK(m.mapped(z25).mapped(z) == Matrix::from_ints(z, {{24, 7}, {10, 3}}));
}
