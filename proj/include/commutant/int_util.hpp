#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace commutant {

using Int = boost::multiprecision::cpp_int;

// g = gcd(a,b) >= 0 and u*a + v*b = g. Convention: ext_gcd(0,0) = (0,0,0).
struct ExtGcd {
    Int g, u, v;
};

ExtGcd ext_gcd(Int a, Int b);

// Non-negative gcd, gcd(0,0) = 0.
Int gcd_nonneg(const Int& a, const Int& b);

Int pow_int(const Int& base, unsigned exp);

// Trial division; inputs are desk-scale.
bool is_prime(const Int& n);

std::vector<Int> primes_upto(unsigned bound);

// Largest e with p^e | n. Requires n != 0, p >= 2.
int valuation(Int n, const Int& p);

// Deterministic 64-bit mix used to derive per-case RNG streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace commutant
