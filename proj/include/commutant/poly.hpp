#pragma once

#include "commutant/matrix.hpp"
#include "commutant/ring.hpp"

#include <string>
#include <vector>

namespace commutant {

// Polynomial with coefficients in a Ring, stored lowest degree first,
// canonical (no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector).
class Poly {
public:
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}
    Poly(Ring ring, std::vector<Elem> coeffs);

    static Poly from_ints(const Ring& ring, std::initializer_list<long long> lowest_first);

    const Ring& ring() const { return ring_; }
    const std::vector<Elem>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Elem coeff(int i) const;  // 0 beyond stored range
    bool is_monic() const;

    bool operator==(const Poly&) const = default;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;

    Elem eval(const Elem& x) const;

    std::string to_string() const;

private:
    Ring ring_;
    std::vector<Elem> c_;
};

// Characteristic polynomial det(x*1 - M) by the Berkowitz division-free
// algorithm, so a single code path serves Z, Q, F_p and Z/p^k.
Poly charpoly(const Matrix& m);  // throws NonSquare

// Row-wise companion matrix: ones on the superdiagonal, negated coefficients
// of f in the last row. charpoly(companion(f)) = f.
Matrix companion(const Poly& f);  // throws NotMonic

}  // namespace commutant
