#include "commutant/lrform.hpp"
#include "commutant/poly.hpp"
#include "commutant/testkit.hpp"

#include <doctest.h>

using namespace commutant;

namespace {
const Ring z = Ring::integers();
}

TEST_CASE("scalarity modulus unfolds the definition") {
    ScalarityData sd = scalarity_modulus(Matrix::from_ints(z, {{3, 2}, {0, 5}}));
    CHECK(sd.mu == 2);
    CHECK(sd.c == 1);
    REQUIRE(sd.b0.has_value());
    CHECK(*sd.b0 == Matrix::from_ints(z, {{1, 1}, {0, 2}}));

    sd = scalarity_modulus(Matrix::from_ints(z, {{0, 1}, {0, 0}}));
    CHECK(sd.mu == 1);
    CHECK(sd.c == 0);
    CHECK(*sd.b0 == Matrix::from_ints(z, {{0, 1}, {0, 0}}));

    sd = scalarity_modulus(Matrix::scalar(z, 3, z.make(7)));
    CHECK(sd.mu == 0);
    CHECK_FALSE(sd.b0.has_value());

    // B0 always has scalarity modulus 1
    testkit::Rng rng(3);
    for (int t = 0; t < 40; ++t) {
        Matrix a = testkit::random_matrix(rng, z, 3, 3, -30, 30);
        ScalarityData s2 = scalarity_modulus(a);
        if (s2.mu == 0) continue;
        CHECK(scalarity_modulus(*s2.b0).mu == 1);
        CHECK(s2.b0->scaled(z.make(s2.mu)) == a - Matrix::scalar(z, 3, z.make(s2.c)));
    }
}

TEST_CASE("field staircase reduction") {
    Ring f5 = Ring::prime_field(5);
    Matrix comp = Matrix::from_ints(f5, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    LRForm lr = staircase_reduce_field(comp);
    CHECK(lr.g == Matrix::identity(f5, 3));
    CHECK(lr.b == comp);
    CHECK(lr.a11 == f5.zero());
    CHECK(lr.a12 == f5.one());

    Matrix diag = Matrix::from_ints(f5, {{1, 0}, {0, -1}});
    lr = staircase_reduce_field(diag);
    CHECK(lr.b == Matrix::from_ints(f5, {{0, 1}, {1, 0}}));
    CHECK(lr.g * diag == lr.b * lr.g);

    CHECK_THROWS_AS(staircase_reduce_field(Matrix::scalar(f5, 2, f5.make(2))), ScalarInput);
    CHECK_THROWS_AS(staircase_reduce_field(Matrix::identity(z, 2).mapped(z)), NotAField);
}

TEST_CASE("field staircase reduction produces LR forms with a11=0, a12=1") {
    testkit::Rng rng(17);
    for (const long p : {2L, 3L, 7L}) {
        Ring f = Ring::prime_field(p);
        for (int t = 0; t < 40; ++t) {
            int n = 2 + static_cast<int>(testkit::rand_long(rng, 0, 3));
            Matrix a = testkit::random_matrix(rng, f, n, n, 0, p - 1);
            if (a.is_scalar()) continue;
            LRForm lr = staircase_reduce_field(a);
            CHECK(is_lr_form(lr.b).ok);
            CHECK(lr.a11 == f.zero());
            CHECK(lr.a12 == f.one());
            CHECK(lr.g * a == lr.b * lr.g);
            CHECK(lr.g * lr.ginv == Matrix::identity(f, n));
        }
    }
}

TEST_CASE("integer LR reduction on the worked examples") {
    Matrix already = Matrix::from_ints(z, {{0, 1, 0}, {0, 0, 1}, {5, 3, 0}});
    LRForm lr = lr_reduce_int(already);
    CHECK(lr.g == Matrix::identity(z, 3));
    CHECK(lr.b == already);

    Matrix two = Matrix::from_ints(z, {{2, 4}, {4, 2}});
    lr = lr_reduce_int(two);
    CHECK(lr.b == two);  // already staircase for n = 2 and = 2*1 mod 4
    CHECK(lr.a12.num == 4);

    CHECK_THROWS_AS(lr_reduce_int(Matrix::scalar(z, 3, z.make(7))), ScalarInput);
}

TEST_CASE("integer LR reduction randomized invariants") {
    testkit::Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(testkit::rand_long(rng, 0, 4));
        Matrix a = testkit::random_matrix(rng, z, n, n, -20, 20);
        if (a.is_scalar()) continue;
        Int mu = scalarity_modulus(a).mu;
        LRForm lr = lr_reduce_int(a, static_cast<std::uint64_t>(t));
        CHECK(is_lr_form(lr.b).ok);
        CHECK(lr.g * a == lr.b * lr.g);
        Int dg = det_bareiss(lr.g);
        CHECK((dg == 1 || dg == -1));
        CHECK(lr.a12.num == mu);
        CHECK(lr.b.trace() == a.trace());
        CHECK(charpoly(lr.b) == charpoly(a));
        // scalarity modulus is a conjugation invariant
        Matrix g = testkit::random_unimodular(rng, n, 10);
        CHECK(scalarity_modulus(g * a * inverse(g)).mu == mu);
    }
}

TEST_CASE("LR predicate") {
    auto p = is_lr_form(Matrix::from_ints(z, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
    CHECK(p.ok);
    CHECK(p.a11 == z.zero());
    CHECK(p.a12 == z.one());

    CHECK(is_lr_form(Matrix::from_ints(z, {{2, 4, 0}, {4, 6, 4}, {8, 4, 2}})).ok);
    CHECK_FALSE(is_lr_form(Matrix::from_ints(z, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}})).ok);
    // congruence failure: off-diagonal entry not divisible by a12
    CHECK_FALSE(is_lr_form(Matrix::from_ints(z, {{0, 4, 0}, {3, 0, 4}, {4, 4, 0}})).ok);
}
