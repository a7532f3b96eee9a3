#include "commutant/poly.hpp"

#include <sstream>
#include <utility>

namespace commutant {

Poly::Poly(Ring ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
}

Poly Poly::from_ints(const Ring& ring, std::initializer_list<long long> lowest_first) {
    std::vector<Elem> c;
    c.reserve(lowest_first.size());
    for (long long v : lowest_first) c.push_back(ring.make(Int(v)));
    return Poly(ring, std::move(c));
}

Elem Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return ring_.zero();
    return c_[static_cast<size_t>(i)];
}

bool Poly::is_monic() const { return !c_.empty() && ring_.is_one(c_.back()); }

Poly Poly::operator+(const Poly& o) const {
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), ring_.zero());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = ring_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(ring_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), ring_.zero());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = ring_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(ring_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(ring_);
    std::vector<Elem> c(c_.size() + o.c_.size() - 1, ring_.zero());
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = ring_.add(c[i + j], ring_.mul(c_[i], o.c_[j]));
    return Poly(ring_, std::move(c));
}

Elem Poly::eval(const Elem& x) const {
    Elem acc = ring_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ring_.add(ring_.mul(acc, x), *it);
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (int i = degree(); i >= 0; --i) {
        if (ring_.is_zero(coeff(i))) continue;
        if (os.tellp() > 0) os << " + ";
        os << ring_.to_string(coeff(i));
        if (i > 0) os << "*x^" << i;
    }
    return os.str();
}

// Berkowitz: process leading principal submatrices one at a time; the r-th
// step multiplies the coefficient vector by an (r+1) x r Toeplitz matrix
// built from the new row/column. No divisions anywhere.
Poly charpoly(const Matrix& m) {
    if (!m.is_square()) throw NonSquare("charpoly of non-square matrix");
    const Ring& R = m.ring();
    int n = m.rows();
    std::vector<Elem> c{R.one()};  // highest degree first
    for (int r = 1; r <= n; ++r) {
        // q[t] = row * prev^t * col, with prev the (r-1)x(r-1) leading block,
        // row = m[r-1][0..r-2], col = m[0..r-2][r-1], corner a = m[r-1][r-1].
        std::vector<Elem> q;
        if (r >= 2) {
            std::vector<Elem> w(static_cast<size_t>(r) - 1);
            for (int i = 0; i < r - 1; ++i) w[static_cast<size_t>(i)] = m.at(i, r - 1);
            for (int t = 0; t <= r - 2; ++t) {
                Elem dot = R.zero();
                for (int i = 0; i < r - 1; ++i)
                    dot = R.add(dot, R.mul(m.at(r - 1, i), w[static_cast<size_t>(i)]));
                q.push_back(dot);
                if (t < r - 2) {
                    std::vector<Elem> w2(static_cast<size_t>(r) - 1, R.zero());
                    for (int i = 0; i < r - 1; ++i)
                        for (int j = 0; j < r - 1; ++j)
                            w2[static_cast<size_t>(i)] =
                                R.add(w2[static_cast<size_t>(i)],
                                      R.mul(m.at(i, j), w[static_cast<size_t>(j)]));
                    w = std::move(w2);
                }
            }
        }
        const Elem a = m.at(r - 1, r - 1);
        std::vector<Elem> next(static_cast<size_t>(r) + 1, R.zero());
        for (int i = 0; i <= r; ++i) {
            Elem s = R.zero();
            for (int j = 0; j < r; ++j) {
                if (static_cast<size_t>(j) >= c.size()) break;
                Elem tij;  // Toeplitz entry T[i][j]
                if (i == j) tij = R.one();
                else if (i == j + 1) tij = R.neg(a);
                else if (i >= j + 2) tij = R.neg(q[static_cast<size_t>(i - j - 2)]);
                else continue;
                s = R.add(s, R.mul(tij, c[static_cast<size_t>(j)]));
            }
            next[static_cast<size_t>(i)] = s;
        }
        c = std::move(next);
    }
    std::vector<Elem> lowest_first(c.rbegin(), c.rend());
    return Poly(R, std::move(lowest_first));
}

Matrix companion(const Poly& f) {
    if (!f.is_monic()) throw NotMonic("companion matrix needs a monic polynomial");
    const Ring& R = f.ring();
    int n = f.degree();
    if (n < 1) throw NotMonic("companion matrix needs degree >= 1");
    Matrix m(R, n, n);
    for (int i = 0; i + 1 < n; ++i) m.set(i, i + 1, R.one());
    for (int j = 0; j < n; ++j) m.set(n - 1, j, R.neg(f.coeff(j)));
    return m;
}

}  // namespace commutant
