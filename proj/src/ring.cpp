#include "commutant/ring.hpp"

#include <utility>

namespace commutant {

namespace {

Int mod_reduce(const Int& n, const Int& m) {
    Int r = n % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

Ring Ring::integers() { return Ring(RingKind::integers, 0, 0, 0); }

Ring Ring::rationals() { return Ring(RingKind::rationals, 0, 0, 0); }

Ring Ring::prime_field(const Int& p) {
    if (!is_prime(p)) throw Error("prime_field: " + p.str() + " is not prime");
    return Ring(RingKind::prime_field, p, 1, p);
}

Ring Ring::residue_ring(const Int& p, int k) {
    if (!is_prime(p)) throw Error("residue_ring: " + p.str() + " is not prime");
    if (k < 1) throw Error("residue_ring: k must be >= 1");
    return Ring(RingKind::residue_ring, p, k, pow_int(p, static_cast<unsigned>(k)));
}

Elem Ring::make(const Int& n) const {
    if (is_modular()) return Elem{mod_reduce(n, modulus_), 1};
    return Elem{n, 1};
}

Elem Ring::make(const Int& num, const Int& den) const {
    if (den == 0) throw Error("zero denominator");
    if (kind_ == RingKind::rationals) {
        Int n = num, d = den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Int g = gcd_nonneg(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
        return Elem{std::move(n), std::move(d)};
    }
    if (kind_ == RingKind::integers) {
        if (num % den != 0) throw Error("non-integral element over Z");
        return Elem{num / den, 1};
    }
    return mul(make(num), inv(make(den)));
}

Elem Ring::add(const Elem& a, const Elem& b) const {
    if (kind_ == RingKind::rationals) return make(a.num * b.den + b.num * a.den, a.den * b.den);
    return make(a.num + b.num);
}

Elem Ring::sub(const Elem& a, const Elem& b) const {
    if (kind_ == RingKind::rationals) return make(a.num * b.den - b.num * a.den, a.den * b.den);
    return make(a.num - b.num);
}

Elem Ring::mul(const Elem& a, const Elem& b) const {
    if (kind_ == RingKind::rationals) return make(a.num * b.num, a.den * b.den);
    return make(a.num * b.num);
}

Elem Ring::neg(const Elem& a) const {
    if (kind_ == RingKind::rationals) return Elem{-a.num, a.den};
    return make(-a.num);
}

bool Ring::is_unit(const Elem& a) const {
    switch (kind_) {
        case RingKind::integers: return a.num == 1 || a.num == -1;
        case RingKind::rationals: return a.num != 0;
        case RingKind::prime_field: return a.num != 0;
        case RingKind::residue_ring: return a.num % p_ != 0;
    }
    return false;
}

Elem Ring::inv(const Elem& a) const {
    if (!is_unit(a)) throw NotAUnit(to_string(a) + " is not a unit in " + name());
    switch (kind_) {
        case RingKind::integers: return a;
        case RingKind::rationals: return make(a.den, a.num);
        default: {
            ExtGcd e = ext_gcd(a.num, modulus_);
            return make(e.u);
        }
    }
}

std::optional<Elem> Ring::div_exact(const Elem& a, const Elem& b) const {
    if (is_zero(b)) {
        if (is_zero(a)) return zero();
        return std::nullopt;
    }
    switch (kind_) {
        case RingKind::rationals:
        case RingKind::prime_field:
            return div(a, b);
        case RingKind::integers:
            if (a.num % b.num != 0) return std::nullopt;
            return Elem{a.num / b.num, 1};
        case RingKind::residue_ring: {
            // b*q = a mod p^k is solvable iff gcd(b, p^k) | a.
            Int g = gcd_nonneg(b.num, modulus_);
            if (a.num % g != 0) return std::nullopt;
            Ring sub = Ring(RingKind::residue_ring, p_, k_, modulus_ / g);
            Elem q = sub.mul(sub.make(a.num / g), sub.inv(sub.make(b.num / g)));
            return make(q.num);
        }
    }
    return std::nullopt;
}

std::string Ring::to_string(const Elem& a) const {
    if (a.den == 1) return a.num.str();
    return a.num.str() + "/" + a.den.str();
}

std::string Ring::name() const {
    switch (kind_) {
        case RingKind::integers: return "Z";
        case RingKind::rationals: return "Q";
        case RingKind::prime_field: return "F_" + p_.str();
        case RingKind::residue_ring: return "Z/" + p_.str() + "^" + std::to_string(k_);
    }
    return "?";
}

Elem Ring::parse(const std::string& s) const {
    if (s.empty()) throw ParseError("empty ring element");
    auto slash = s.find('/');
    if (slash != std::string::npos && kind_ != RingKind::rationals)
        throw ParseError("fraction \"" + s + "\" not valid over " + name());
    try {
        if (slash == std::string::npos) return make(Int(s));
        return make(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::runtime_error& e) {
        throw ParseError("cannot parse ring element \"" + s + "\": " + e.what());
    }
}

}  // namespace commutant
