#pragma once

#include "commutant/ring.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace commutant {

// Dense exact matrix over a Ring. Row-major, immutable-by-convention value
// type: operations return fresh matrices.
class Matrix {
public:
    Matrix(Ring ring, int rows, int cols);  // zero-filled

    static Matrix identity(const Ring& ring, int n);
    static Matrix zero(const Ring& ring, int rows, int cols) { return Matrix(ring, rows, cols); }
    static Matrix scalar(const Ring& ring, int n, const Elem& lambda);

    // Convenience constructor from integer literals (canonicalized per ring).
    static Matrix from_ints(const Ring& ring,
                            std::initializer_list<std::initializer_list<long long>> rows);

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Elem& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, const Elem& v) { e_[static_cast<size_t>(i) * cols_ + j] = v; }

    bool operator==(const Matrix&) const = default;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Elem& c) const;

    Elem trace() const;      // throws NonSquare
    Matrix pow(int r) const; // throws NonSquare; r >= 0
    Matrix transpose() const;

    bool is_zero() const;
    bool is_scalar() const;  // square and equal to lambda*I for some lambda

    Matrix block(int i0, int j0, int r, int c) const;
    void set_block(int i0, int j0, const Matrix& b);

    // Entry-wise conversion into another ring (lift to num/den, canonicalize
    // there). Serves Z -> F_p reduction, Z/p^k lifts, Z -> Q embedding, ...
    Matrix mapped(const Ring& target) const;

    std::string to_string() const;  // human-readable, for diagnostics

private:
    Ring ring_;
    int rows_, cols_;
    std::vector<Elem> e_;
};

Matrix commutator(const Matrix& x, const Matrix& y);  // xy - yx

// Division-free determinant by cofactor expansion; works over any ring.
Elem det_cofactor(const Matrix& m);

// Fraction-free Bareiss determinant; integer matrices only.
Int det_bareiss(const Matrix& m);

// Inverse via adjugate and det-inverse; throws NotAUnit when det is not a
// unit. Division-free apart from the final unit inversion, so it is valid
// over Z/p^k as well as over fields and Z (where it requires det = +-1).
Matrix inverse(const Matrix& m);

}  // namespace commutant
