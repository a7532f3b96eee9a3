#include "commutant/latsolve.hpp"
#include "commutant/testkit.hpp"

#include <doctest.h>

using namespace commutant;

namespace {
const Ring z = Ring::integers();
}

TEST_CASE("hermite form on the worked examples") {
    HnfResult r = hnf(Matrix::from_ints(z, {{4, 6}, {2, 3}}));
    CHECK(r.H == Matrix::from_ints(z, {{2, 3}, {0, 0}}));
    CHECK(r.U * Matrix::from_ints(z, {{4, 6}, {2, 3}}) == r.H);
    Int du = det_bareiss(r.U);
    CHECK((du == 1 || du == -1));

    r = hnf(Matrix::identity(z, 3));
    CHECK(r.H == Matrix::identity(z, 3));
    CHECK(r.U == Matrix::identity(z, 3));

    r = hnf(Matrix::zero(z, 2, 2));
    CHECK(r.H == Matrix::zero(z, 2, 2));
    CHECK(r.U == Matrix::identity(z, 2));
}

TEST_CASE("smith form on the worked examples") {
    SnfResult r = snf(Matrix::from_ints(z, {{2, 4}, {6, 8}}));
    CHECK(r.D == Matrix::from_ints(z, {{2, 0}, {0, 4}}));
    CHECK(r.U * Matrix::from_ints(z, {{2, 4}, {6, 8}}) * r.V == r.D);

    CHECK(snf(Matrix::from_ints(z, {{1, 0}, {0, 0}})).D == Matrix::from_ints(z, {{1, 0}, {0, 0}}));
    CHECK(snf(Matrix::from_ints(z, {{0, 1}, {1, 0}})).D == Matrix::identity(z, 2));
}

TEST_CASE("smith form invariants on random matrices") {
    testkit::Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        int rows = 1 + static_cast<int>(testkit::rand_long(rng, 0, 5));
        int cols = 1 + static_cast<int>(testkit::rand_long(rng, 0, 5));
        Matrix m = testkit::random_matrix(rng, z, rows, cols, -9, 9);
        SnfResult r = snf(m);
        CHECK(r.U * m * r.V == r.D);
        CHECK(r.U * r.Uinv == Matrix::identity(z, rows));
        CHECK(r.V * r.Vinv == Matrix::identity(z, cols));
        Int prod = 1;
        Int prev = 0;
        for (int i = 0; i < std::min(rows, cols); ++i) {
            Int d = r.D.at(i, i).num;
            CHECK(d >= 0);
            if (prev > 0) CHECK(d % prev == 0);
            if (prev == 0 && i > 0) CHECK(d == 0);
            prod *= d;
            CHECK(prod == testkit::minor_gcd(m, i + 1));
            prev = d;
        }
    }
}

TEST_CASE("solve_linear over Z, Q and Z/p^k") {
    CHECK(*solve_linear(Matrix::from_ints(z, {{2}}), Matrix::from_ints(z, {{4}})) ==
          Matrix::from_ints(z, {{2}}));
    CHECK_FALSE(solve_linear(Matrix::from_ints(z, {{2}}), Matrix::from_ints(z, {{3}})));

    Ring z25 = Ring::residue_ring(5, 2);
    auto r = solve_linear(Matrix::from_ints(z25, {{2}}), Matrix::from_ints(z25, {{3}}));
    REQUIRE(r.has_value());
    CHECK(*r == Matrix::from_ints(z25, {{14}}));

    Ring q = Ring::rationals();
    Matrix m = Matrix::from_ints(q, {{2, 1}, {1, 1}});
    Matrix c = Matrix::from_ints(q, {{1}, {1}});
    auto sol = solve_linear(m, c);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == c);

    // inconsistent over a field
    CHECK_FALSE(solve_linear(Matrix::from_ints(q, {{1, 1}, {1, 1}}),
                             Matrix::from_ints(q, {{0}, {1}})));
    CHECK_THROWS_AS(solve_linear(Matrix::from_ints(z, {{1, 2}}), Matrix::from_ints(z, {{1}, {2}})),
                    DimensionMismatch);
}

TEST_CASE("solve_linear over Z matches exhaustive search on small boxes") {
    testkit::Rng rng(11);
    for (int t = 0; t < 120; ++t) {
        int rows = 1 + static_cast<int>(testkit::rand_long(rng, 0, 2));
        Matrix m = testkit::random_matrix(rng, z, rows, 2, -4, 4);
        Matrix c(z, rows, 1);
        if (t % 2 == 0) {
            Matrix zs(z, 2, 1);
            zs.set(0, 0, z.make(Int(testkit::rand_long(rng, -20, 20))));
            zs.set(1, 0, z.make(Int(testkit::rand_long(rng, -20, 20))));
            c = m * zs;
        } else {
            c = testkit::random_matrix(rng, z, rows, 1, -9, 9);
        }
        bool found = false;
        for (long a = -20; a <= 20 && !found; ++a)
            for (long b = -20; b <= 20 && !found; ++b)
                found = m * Matrix::from_ints(z, {{a}, {b}}) == c;
        auto sol = solve_linear(m, c);
        if (found) CHECK(sol.has_value());
        if (sol) CHECK(m * *sol == c);
    }
}

TEST_CASE("kernel generators") {
    Ring f5 = Ring::prime_field(5);
    CHECK(kernel_basis(Matrix::identity(f5, 2)).empty());

    auto kz = kernel_basis(Matrix::from_ints(z, {{1, 1}}));
    REQUIRE(kz.size() == 1);
    CHECK((kz[0] == Matrix::from_ints(z, {{1}, {-1}}) || kz[0] == Matrix::from_ints(z, {{-1}, {1}})));

    Ring z25 = Ring::residue_ring(5, 2);
    auto kr = kernel_basis(Matrix::from_ints(z25, {{5}}));
    REQUIRE(kr.size() == 1);
    CHECK(valuation(kr[0].at(0, 0).num, 5) == 1);  // a unit multiple of 5
    CHECK(z25.mul(z25.make(5), kr[0].at(0, 0)) == z25.zero());
}

TEST_CASE("saturation of integer row spans") {
    Matrix sat = saturate(Matrix::from_ints(z, {{2, 0}, {0, 2}}));
    CHECK(testkit::minor_gcd(sat, 2) == 1);

    CHECK(saturate(Matrix::from_ints(z, {{1, 2}})) == Matrix::from_ints(z, {{1, 2}}));
    CHECK(saturate(Matrix::from_ints(z, {{2, 4}})) == Matrix::from_ints(z, {{1, 2}}));
    CHECK_THROWS_AS(saturate(Matrix::from_ints(z, {{1, 2}, {2, 4}})), RankDeficient);
}

TEST_CASE("basis completion") {
    Matrix g = complete_basis(Matrix::from_ints(z, {{0, 1, 0}}));
    CHECK(g.rows() == 3);
    CHECK(g.block(0, 0, 1, 3) == Matrix::from_ints(z, {{0, 1, 0}}));
    Int d = det_bareiss(g);
    CHECK((d == 1 || d == -1));

    CHECK(complete_basis(Matrix::identity(z, 2)) == Matrix::identity(z, 2));

    Matrix g2 = complete_basis(Matrix::from_ints(z, {{2, 3}}));
    CHECK(g2.block(0, 0, 1, 2) == Matrix::from_ints(z, {{2, 3}}));
    Int d2 = det_bareiss(g2);
    CHECK((d2 == 1 || d2 == -1));

    CHECK_THROWS_AS(complete_basis(Matrix::from_ints(z, {{2, 4}})), NotSaturated);
}
