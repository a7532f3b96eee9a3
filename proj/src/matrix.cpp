#include "commutant/matrix.hpp"

#include <sstream>
#include <utility>

namespace commutant {

namespace {

void check_same_ring(const Matrix& a, const Matrix& b) {
    if (!(a.ring() == b.ring()))
        throw RingMismatch("matrices over " + a.ring().name() + " and " + b.ring().name());
}

}  // namespace

Matrix::Matrix(Ring ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, ring_.zero()) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

Matrix Matrix::identity(const Ring& ring, int n) {
    Matrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, ring.one());
    return m;
}

Matrix Matrix::scalar(const Ring& ring, int n, const Elem& lambda) {
    Matrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, lambda);
    return m;
}

Matrix Matrix::from_ints(const Ring& ring,
                         std::initializer_list<std::initializer_list<long long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Matrix m(ring, r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw DimensionMismatch("ragged initializer");
        int j = 0;
        for (long long v : row) m.set(i, j++, ring.make(Int(v)));
        ++i;
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_ring(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add");
    Matrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = ring_.add(e_[i], o.e_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_ring(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub");
    Matrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = ring_.sub(e_[i], o.e_[i]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_ring(*this, o);
    if (cols_ != o.rows_) throw DimensionMismatch("matrix mul");
    Matrix r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Elem s = ring_.zero();
            for (int k = 0; k < cols_; ++k) s = ring_.add(s, ring_.mul(at(i, k), o.at(k, j)));
            r.set(i, j, s);
        }
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = ring_.neg(e_[i]);
    return r;
}

Matrix Matrix::scaled(const Elem& c) const {
    Matrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = ring_.mul(e_[i], c);
    return r;
}

Elem Matrix::trace() const {
    if (!is_square()) throw NonSquare("trace of non-square matrix");
    Elem s = ring_.zero();
    for (int i = 0; i < rows_; ++i) s = ring_.add(s, at(i, i));
    return s;
}

Matrix Matrix::pow(int r) const {
    if (!is_square()) throw NonSquare("power of non-square matrix");
    Matrix acc = identity(ring_, rows_);
    for (int i = 0; i < r; ++i) acc = acc * *this;
    return acc;
}

Matrix Matrix::transpose() const {
    Matrix r(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool Matrix::is_zero() const {
    for (const Elem& v : e_)
        if (!ring_.is_zero(v)) return false;
    return true;
}

bool Matrix::is_scalar() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? !(at(i, i) == at(0, 0)) : !ring_.is_zero(at(i, j))) return false;
        }
    return true;
}

Matrix Matrix::block(int i0, int j0, int r, int c) const {
    if (i0 < 0 || j0 < 0 || i0 + r > rows_ || j0 + c > cols_)
        throw DimensionMismatch("block out of range");
    Matrix b(ring_, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) b.set(i, j, at(i0 + i, j0 + j));
    return b;
}

void Matrix::set_block(int i0, int j0, const Matrix& b) {
    check_same_ring(*this, b);
    if (i0 < 0 || j0 < 0 || i0 + b.rows() > rows_ || j0 + b.cols() > cols_)
        throw DimensionMismatch("block out of range");
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) set(i0 + i, j0 + j, b.at(i, j));
}

Matrix Matrix::mapped(const Ring& target) const {
    Matrix r(target, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = e_[i].den == 1 ? target.make(e_[i].num) : target.make(e_[i].num, e_[i].den);
    return r;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << ring_.to_string(at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

Elem det_cofactor(const Matrix& m) {
    if (!m.is_square()) throw NonSquare("determinant of non-square matrix");
    const Ring& R = m.ring();
    int n = m.rows();
    if (n == 0) return R.one();
    if (n == 1) return m.at(0, 0);
    Elem det = R.zero();
    for (int j = 0; j < n; ++j) {
        if (R.is_zero(m.at(0, j))) continue;
        Matrix sub(R, n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.set(i - 1, cc++, m.at(i, c));
            }
        }
        Elem term = R.mul(m.at(0, j), det_cofactor(sub));
        det = (j % 2 == 0) ? R.add(det, term) : R.sub(det, term);
    }
    return det;
}

Int det_bareiss(const Matrix& m) {
    if (!m.is_square()) throw NonSquare("determinant of non-square matrix");
    if (m.ring().kind() != RingKind::integers) throw RingMismatch("det_bareiss needs Z");
    int n = m.rows();
    if (n == 0) return 1;
    std::vector<Int> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.at(i, j).num;
    auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * n + j]; };
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : Int(-at(n - 1, n - 1));
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw NonSquare("inverse of non-square matrix");
    const Ring& R = m.ring();
    int n = m.rows();
    Elem det = det_cofactor(m);
    Elem dinv = R.inv(det);  // throws NotAUnit
    Matrix adj(R, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix sub(R, n - 1, n - 1);
            int rr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    sub.set(rr, cc++, m.at(r, c));
                }
                ++rr;
            }
            Elem cof = det_cofactor(sub);
            if ((i + j) % 2 == 1) cof = R.neg(cof);
            adj.set(j, i, cof);  // adjugate is the transposed cofactor matrix
        }
    return adj.scaled(dinv);
}

}  // namespace commutant
