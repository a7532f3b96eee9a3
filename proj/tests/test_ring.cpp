#include "commutant/ring.hpp"

#include <doctest.h>

using namespace commutant;

TEST_CASE("ext_gcd matches the hand oracle") {
    auto r = ext_gcd(12, 18);
    CHECK(r.g == 6);
    CHECK(r.u == -1);
    CHECK(r.v == 1);
    CHECK(r.u * 12 + r.v * 18 == r.g);

    r = ext_gcd(5, 0);
    CHECK(r.g == 5);
    CHECK(r.u == 1);
    CHECK(r.v == 0);

    r = ext_gcd(0, 0);
    CHECK(r.g == 0);
    CHECK(r.u == 0);
    CHECK(r.v == 0);

    // sign normalization and Bezout on negative inputs
    for (long a : {-12, 12})
        for (long b : {-18, 18}) {
            auto e = ext_gcd(a, b);
            CHECK(e.g == 6);
            CHECK(e.u * a + e.v * b == e.g);
        }
}

TEST_CASE("unit inverses per ring") {
    Ring f5 = Ring::prime_field(5);
    CHECK(f5.inv(f5.make(2)) == f5.make(3));

    Ring z25 = Ring::residue_ring(5, 2);
    CHECK(z25.inv(z25.make(7)) == z25.make(18));  // 7*18 = 126 = 1 mod 25

    Ring z = Ring::integers();
    CHECK_THROWS_AS(z.inv(z.make(2)), NotAUnit);
    CHECK(z.inv(z.make(-1)) == z.make(-1));

    CHECK_THROWS_AS(z25.inv(z25.make(5)), NotAUnit);
}

TEST_CASE("residue ring representatives are canonical") {
    Ring z9 = Ring::residue_ring(3, 2);
    CHECK(z9.make(-1).num == 8);
    CHECK(z9.make(10).num == 1);
    CHECK(z9.modulus() == 9);
    CHECK(z9.add(z9.make(5), z9.make(7)).num == 3);
}

TEST_CASE("rationals stay reduced with positive denominators") {
    Ring q = Ring::rationals();
    Elem e = q.make(4, -6);
    CHECK(e.num == -2);
    CHECK(e.den == 3);
    CHECK(q.mul(q.make(2, 3), q.make(3, 2)) == q.one());
    CHECK(q.add(q.make(1, 2), q.make(1, 2)) == q.one());
    CHECK(q.make(0, 7) == q.zero());
}

TEST_CASE("div_exact handles zero divisors in Z/p^k") {
    Ring z25 = Ring::residue_ring(5, 2);
    // 5*q = 10 mod 25: q = 2 works
    auto q = z25.div_exact(z25.make(10), z25.make(5));
    REQUIRE(q.has_value());
    CHECK(z25.mul(z25.make(5), *q) == z25.make(10));
    CHECK_FALSE(z25.div_exact(z25.make(7), z25.make(5)).has_value());

    Ring z = Ring::integers();
    CHECK(z.div_exact(z.make(6), z.make(3)) == z.make(2));
    CHECK_FALSE(z.div_exact(z.make(7), z.make(3)).has_value());
    CHECK(z.div_exact(z.zero(), z.zero()) == z.zero());
    CHECK_FALSE(z.div_exact(z.one(), z.zero()).has_value());
}

TEST_CASE("ring construction rejects bad parameters") {
    CHECK_THROWS_AS(Ring::prime_field(6), Error);
    CHECK_THROWS_AS(Ring::residue_ring(4, 2), Error);
    CHECK_THROWS_AS(Ring::residue_ring(5, 0), Error);
}

TEST_CASE("element parsing") {
    Ring q = Ring::rationals();
    CHECK(q.parse("-3/6") == q.make(-1, 2));
    Ring z = Ring::integers();
    CHECK(z.parse("-42") == z.make(-42));
    CHECK_THROWS_AS(z.parse("1/2"), ParseError);
    CHECK_THROWS_AS(z.parse("abc"), ParseError);
    CHECK_THROWS_AS(q.parse(""), ParseError);
}

TEST_CASE("primality and valuation helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(valuation(50, 5) == 2);
    CHECK(valuation(-8, 2) == 3);
    CHECK(primes_upto(13) == std::vector<Int>{2, 3, 5, 7, 11, 13});
}
