#pragma once

#include "commutant/errors.hpp"
#include "commutant/int_util.hpp"

#include <optional>
#include <string>

namespace commutant {

enum class RingKind { integers, rationals, prime_field, residue_ring };

// One ring element. `den` is 1 except over the rationals, where num/den is in
// lowest terms with den > 0. Modular representatives lie in [0, modulus).
struct Elem {
    Int num;
    Int den = 1;

    bool operator==(const Elem&) const = default;
};

// Descriptor of the coefficient ring in force: Z, Q, F_p or Z/p^k.
// All element arithmetic is routed through this class so that one code path
// serves every supported ring.
class Ring {
public:
    static Ring integers();
    static Ring rationals();
    static Ring prime_field(const Int& p);
    static Ring residue_ring(const Int& p, int k);

    RingKind kind() const { return kind_; }
    const Int& p() const { return p_; }
    int k() const { return k_; }
    // p for prime fields, p^k for residue rings.
    const Int& modulus() const { return modulus_; }

    bool is_field() const {
        return kind_ == RingKind::rationals || kind_ == RingKind::prime_field;
    }
    bool is_modular() const {
        return kind_ == RingKind::prime_field || kind_ == RingKind::residue_ring;
    }

    bool operator==(const Ring&) const = default;

    Elem zero() const { return Elem{0, 1}; }
    Elem one() const { return make(1); }

    // Canonicalize an integer (or a fraction) as an element of this ring.
    Elem make(const Int& n) const;
    Elem make(const Int& num, const Int& den) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;

    bool is_zero(const Elem& a) const { return a.num == 0; }
    bool is_one(const Elem& a) const { return a == one(); }

    bool is_unit(const Elem& a) const;
    Elem inv(const Elem& a) const;  // throws NotAUnit
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    // q with b*q = a, if one exists. Unlike div this also handles zero
    // divisors (Z/p^k) and non-units (Z), returning any valid quotient.
    std::optional<Elem> div_exact(const Elem& a, const Elem& b) const;

    // n*1 in this ring (used for characteristic checks such as n = 0).
    bool int_is_zero(const Int& n) const { return is_zero(make(n)); }

    std::string to_string(const Elem& a) const;
    std::string name() const;

    // Parse "n" or "n/d"; fractions only over the rationals.
    Elem parse(const std::string& s) const;

private:
    Ring(RingKind kind, Int p, int k, Int modulus)
        : kind_(kind), p_(std::move(p)), k_(k), modulus_(std::move(modulus)) {}

    RingKind kind_;
    Int p_;        // 0 unless modular
    int k_ = 0;    // 0 unless modular (prime_field has k = 1)
    Int modulus_;  // 0 unless modular
};

}  // namespace commutant
