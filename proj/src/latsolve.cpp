#include "commutant/latsolve.hpp"

#include <algorithm>
#include <utility>

namespace commutant {

namespace {

const Ring& ringZ() {
    static const Ring z = Ring::integers();
    return z;
}

void require_integers(const Matrix& m, const char* what) {
    if (m.ring().kind() != RingKind::integers) throw RingMismatch(std::string(what) + " needs Z");
}

Int ent(const Matrix& m, int i, int j) { return m.at(i, j).num; }

void put(Matrix& m, int i, int j, Int v) { m.set(i, j, Elem{std::move(v), 1}); }

// floor division with divisor > 0
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r < 0) q -= 1;
    return q;
}

// Integer matrix under elementary row/column operations, with the unimodular
// transforms and their inverses accumulated on the side.
struct Worksheet {
    Matrix s, u, uinv, v, vinv;

    explicit Worksheet(const Matrix& m)
        : s(m),
          u(Matrix::identity(ringZ(), m.rows())),
          uinv(Matrix::identity(ringZ(), m.rows())),
          v(Matrix::identity(ringZ(), m.cols())),
          vinv(Matrix::identity(ringZ(), m.cols())) {}

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < s.cols(); ++j) {
            Int t = ent(s, a, j);
            put(s, a, j, ent(s, b, j));
            put(s, b, j, t);
        }
        for (int j = 0; j < u.cols(); ++j) {
            Int t = ent(u, a, j);
            put(u, a, j, ent(u, b, j));
            put(u, b, j, t);
            t = ent(uinv, j, a);
            put(uinv, j, a, ent(uinv, j, b));
            put(uinv, j, b, t);
        }
    }

    void negate_row(int a) {
        for (int j = 0; j < s.cols(); ++j) put(s, a, j, -ent(s, a, j));
        for (int j = 0; j < u.cols(); ++j) {
            put(u, a, j, -ent(u, a, j));
            put(uinv, j, a, -ent(uinv, j, a));
        }
    }

    // row[dst] += q * row[src]
    void addmul_row(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < s.cols(); ++j) put(s, dst, j, ent(s, dst, j) + q * ent(s, src, j));
        for (int j = 0; j < u.cols(); ++j) {
            put(u, dst, j, ent(u, dst, j) + q * ent(u, src, j));
            put(uinv, j, src, ent(uinv, j, src) - q * ent(uinv, j, dst));
        }
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < s.rows(); ++i) {
            Int t = ent(s, i, a);
            put(s, i, a, ent(s, i, b));
            put(s, i, b, t);
        }
        for (int i = 0; i < v.rows(); ++i) {
            Int t = ent(v, i, a);
            put(v, i, a, ent(v, i, b));
            put(v, i, b, t);
            t = ent(vinv, a, i);
            put(vinv, a, i, ent(vinv, b, i));
            put(vinv, b, i, t);
        }
    }

    void negate_col(int a) {
        for (int i = 0; i < s.rows(); ++i) put(s, i, a, -ent(s, i, a));
        for (int i = 0; i < v.rows(); ++i) {
            put(v, i, a, -ent(v, i, a));
            put(vinv, a, i, -ent(vinv, a, i));
        }
    }

    // col[dst] += q * col[src]
    void addmul_col(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < s.rows(); ++i) put(s, i, dst, ent(s, i, dst) + q * ent(s, i, src));
        for (int i = 0; i < v.rows(); ++i) {
            put(v, i, dst, ent(v, i, dst) + q * ent(v, i, src));
            put(vinv, src, i, ent(vinv, src, i) - q * ent(vinv, dst, i));
        }
    }
};

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

}  // namespace

HnfResult hnf(const Matrix& m) {
    require_integers(m, "hnf");
    Worksheet w(m);
    const int rows = m.rows(), cols = m.cols();
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        bool any = false;
        for (int i = row; i < rows; ++i) any = any || ent(w.s, i, col) != 0;
        if (!any) continue;
        // Euclidean elimination within the column
        for (;;) {
            int best = -1;
            for (int i = row; i < rows; ++i) {
                if (ent(w.s, i, col) == 0) continue;
                if (best < 0 || abs_int(ent(w.s, i, col)) < abs_int(ent(w.s, best, col))) best = i;
            }
            w.swap_rows(row, best);
            bool clear = true;
            for (int i = row + 1; i < rows; ++i) {
                if (ent(w.s, i, col) == 0) continue;
                Int q = ent(w.s, i, col) / ent(w.s, row, col);
                w.addmul_row(i, row, -q);
                clear = clear && ent(w.s, i, col) == 0;
            }
            if (clear) break;
        }
        if (ent(w.s, row, col) < 0) w.negate_row(row);
        for (int i = 0; i < row; ++i) {
            Int q = floor_div(ent(w.s, i, col), ent(w.s, row, col));
            w.addmul_row(i, row, -q);
        }
        ++row;
    }
    return HnfResult{std::move(w.s), std::move(w.u)};
}

SnfResult snf(const Matrix& m) {
    require_integers(m, "snf");
    Worksheet w(m);
    const int rows = m.rows(), cols = m.cols();
    const int t_max = std::min(rows, cols);
    for (int t = 0; t < t_max; ++t) {
        // smallest nonzero entry of the trailing block into the pivot seat
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (ent(w.s, i, j) == 0) continue;
                if (pi < 0 || abs_int(ent(w.s, i, j)) < abs_int(ent(w.s, pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        for (;;) {
            bool dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (ent(w.s, i, t) == 0) continue;
                Int q = ent(w.s, i, t) / ent(w.s, t, t);
                w.addmul_row(i, t, -q);
                if (ent(w.s, i, t) != 0) {
                    w.swap_rows(t, i);  // strictly smaller remainder becomes the pivot
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (int j = t + 1; j < cols; ++j) {
                if (ent(w.s, t, j) == 0) continue;
                Int q = ent(w.s, t, j) / ent(w.s, t, t);
                w.addmul_col(j, t, -q);
                if (ent(w.s, t, j) != 0) {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot must divide the whole trailing block for the chain
            int bi = -1, bj = -1;
            for (int i = t + 1; i < rows && bi < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (ent(w.s, i, j) % ent(w.s, t, t) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            w.addmul_row(t, bi, 1);
        }
        if (ent(w.s, t, t) < 0) w.negate_row(t);
    }
    return SnfResult{std::move(w.s), std::move(w.u), std::move(w.v), std::move(w.uinv),
                     std::move(w.vinv)};
}

namespace {

// Gaussian elimination over a field; returns reduced system for reuse by
// both the solver and the kernel computation.
struct FieldEchelon {
    Matrix a;                // reduced augmented-or-plain matrix
    std::vector<int> pivot;  // pivot column per pivot row
};

FieldEchelon field_echelon(Matrix a) {
    const Ring R = a.ring();
    FieldEchelon out{std::move(a), {}};
    Matrix& M = out.a;
    int row = 0;
    for (int col = 0; col < M.cols() && row < M.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < M.rows(); ++i)
            if (!R.is_zero(M.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < M.cols(); ++j) {
            Elem t = M.at(row, j);
            M.set(row, j, M.at(piv, j));
            M.set(piv, j, t);
        }
        Elem inv = R.inv(M.at(row, col));
        for (int j = col; j < M.cols(); ++j) M.set(row, j, R.mul(M.at(row, j), inv));
        for (int i = 0; i < M.rows(); ++i) {
            if (i == row || R.is_zero(M.at(i, col))) continue;
            Elem f = M.at(i, col);
            for (int j = col; j < M.cols(); ++j)
                M.set(i, j, R.sub(M.at(i, j), R.mul(f, M.at(row, j))));
        }
        out.pivot.push_back(col);
        ++row;
    }
    return out;
}

std::optional<Matrix> solve_field(const Matrix& m, const Matrix& c) {
    const Ring& R = m.ring();
    Matrix aug(R, m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    aug.set_block(0, m.cols(), c);
    FieldEchelon e = field_echelon(std::move(aug));
    int rank = static_cast<int>(e.pivot.size());
    // inconsistent iff a pivot lands in the RHS column
    if (rank > 0 && e.pivot.back() == m.cols()) return std::nullopt;
    Matrix z(R, m.cols(), 1);
    for (int r = 0; r < rank; ++r) z.set(e.pivot[static_cast<size_t>(r)], 0, e.a.at(r, m.cols()));
    return z;
}

std::optional<Matrix> solve_integers(const Matrix& m, const Matrix& c) {
    SnfResult s = snf(m);
    Matrix uc = s.U * c;
    const int n = m.cols(), mm = m.rows();
    const int diag = std::min(mm, n);
    Matrix w(ringZ(), n, 1);
    for (int i = 0; i < mm; ++i) {
        Int rhs = ent(uc, i, 0);
        Int d = i < diag ? ent(s.D, i, i) : Int(0);
        if (d == 0) {
            if (rhs != 0) return std::nullopt;
        } else {
            if (rhs % d != 0) return std::nullopt;
            put(w, i, 0, rhs / d);
        }
    }
    return s.V * w;
}

std::optional<Matrix> solve_residue(const Matrix& m, const Matrix& c) {
    const Ring& R = m.ring();
    const Ring& Z = ringZ();
    const int rows = m.rows(), n = m.cols();
    Matrix lifted(Z, rows, n + rows);
    lifted.set_block(0, 0, m.mapped(Z));
    for (int i = 0; i < rows; ++i) put(lifted, i, n + i, R.modulus());
    auto zt = solve_integers(lifted, c.mapped(Z));
    if (!zt) return std::nullopt;
    return zt->block(0, 0, n, 1).mapped(R);
}

}  // namespace

std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& c) {
    if (!(m.ring() == c.ring())) throw RingMismatch("solve_linear: mixed rings");
    if (c.cols() != 1 || c.rows() != m.rows()) throw DimensionMismatch("solve_linear: rhs shape");
    switch (m.ring().kind()) {
        case RingKind::rationals:
        case RingKind::prime_field: return solve_field(m, c);
        case RingKind::integers: return solve_integers(m, c);
        case RingKind::residue_ring: return solve_residue(m, c);
    }
    throw Error("unreachable ring kind");
}

std::vector<Matrix> kernel_basis(const Matrix& m) {
    const Ring& R = m.ring();
    const int n = m.cols();
    std::vector<Matrix> out;
    switch (R.kind()) {
        case RingKind::rationals:
        case RingKind::prime_field: {
            FieldEchelon e = field_echelon(m);
            std::vector<bool> is_pivot(static_cast<size_t>(n), false);
            for (int p : e.pivot) is_pivot[static_cast<size_t>(p)] = true;
            for (int f = 0; f < n; ++f) {
                if (is_pivot[static_cast<size_t>(f)]) continue;
                Matrix z(R, n, 1);
                z.set(f, 0, R.one());
                for (size_t r = 0; r < e.pivot.size(); ++r)
                    z.set(e.pivot[r], 0, R.neg(e.a.at(static_cast<int>(r), f)));
                out.push_back(std::move(z));
            }
            return out;
        }
        case RingKind::integers: {
            SnfResult s = snf(m);
            const int diag = std::min(m.rows(), n);
            for (int i = 0; i < n; ++i) {
                if (i < diag && ent(s.D, i, i) != 0) continue;
                out.push_back(s.V.block(0, i, n, 1));
            }
            return out;
        }
        case RingKind::residue_ring: {
            const Ring& Z = ringZ();
            const int rows = m.rows();
            Matrix lifted(Z, rows, n + rows);
            lifted.set_block(0, 0, m.mapped(Z));
            for (int i = 0; i < rows; ++i) put(lifted, i, n + i, R.modulus());
            for (const Matrix& g : kernel_basis(lifted)) {
                Matrix z = g.block(0, 0, n, 1).mapped(R);
                if (!z.is_zero()) out.push_back(std::move(z));
            }
            return out;
        }
    }
    throw Error("unreachable ring kind");
}

Matrix saturate(const Matrix& rows) {
    require_integers(rows, "saturate");
    const int r = rows.rows(), n = rows.cols();
    SnfResult s = snf(rows);
    int rank = 0;
    for (int i = 0; i < std::min(r, n); ++i)
        if (ent(s.D, i, i) != 0) ++rank;
    if (rank < r) throw RankDeficient("saturate: rows are rationally dependent");
    // row space over Q is spanned by the first r rows of Vinv, which are part
    // of a basis of Z^n, hence already saturated
    return s.Vinv.block(0, 0, r, n);
}

Matrix complete_basis(const Matrix& rows) {
    require_integers(rows, "complete_basis");
    const int r = rows.rows(), n = rows.cols();
    if (r > n) throw NotSaturated("more rows than columns");
    SnfResult s = snf(rows);
    for (int i = 0; i < r; ++i)
        if (ent(s.D, i, i) != 1) throw NotSaturated("rows do not span a saturated lattice");
    Matrix g(ringZ(), n, n);
    g.set_block(0, 0, rows);
    if (r < n) g.set_block(r, 0, s.Vinv.block(r, 0, n - r, n));
    Int d = det_bareiss(g);
    if (d != 1 && d != -1)
        throw InternalInvariantViolation("completed basis is not unimodular");
    return g;
}

}  // namespace commutant
