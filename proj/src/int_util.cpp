#include "commutant/int_util.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace commutant {

ExtGcd ext_gcd(Int a, Int b) {
    if (a == 0 && b == 0) return {0, 0, 0};
    Int old_r = std::move(a), r = std::move(b);
    Int old_u = 1, u = 0;
    Int old_v = 0, v = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = std::exchange(r, std::move(t));
        t = old_u - q * u;
        old_u = std::exchange(u, std::move(t));
        t = old_v - q * v;
        old_v = std::exchange(v, std::move(t));
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    return {std::move(old_r), std::move(old_u), std::move(old_v)};
}

Int gcd_nonneg(const Int& a, const Int& b) {
    Int g = boost::multiprecision::gcd(a, b);
    return g < 0 ? Int(-g) : g;
}

Int pow_int(const Int& base, unsigned exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<Int> primes_upto(unsigned bound) {
    std::vector<bool> sieve(bound + 1, true);
    std::vector<Int> out;
    for (unsigned i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.emplace_back(i);
        for (unsigned long long j = static_cast<unsigned long long>(i) * i; j <= bound; j += i)
            sieve[static_cast<unsigned>(j)] = false;
    }
    return out;
}

int valuation(Int n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation of 0");
    if (n < 0) n = -n;
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the combined words
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace commutant
