#include "commutant/lrform.hpp"

#include "commutant/latsolve.hpp"

#include <random>
#include <utility>
#include <vector>

namespace commutant {

namespace {

const Ring& ringZ() {
    static const Ring z = Ring::integers();
    return z;
}

Int ent(const Matrix& m, int i, int j) { return m.at(i, j).num; }

void put(Matrix& m, int i, int j, Int v) { m.set(i, j, Elem{std::move(v), 1}); }

// gcd of all 2x2 minors of the 2xn matrix [v; w]; early exit at 1.
Int pair_minor_gcd(const std::vector<Int>& v, const std::vector<Int>& w) {
    Int g = 0;
    for (size_t i = 0; i + 1 < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) {
            g = gcd_nonneg(g, v[i] * w[j] - v[j] * w[i]);
            if (g == 1) return g;
        }
    return g;
}

std::vector<Int> row_times(const std::vector<Int>& v, const Matrix& m) {
    std::vector<Int> out(static_cast<size_t>(m.cols()), 0);
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) out[static_cast<size_t>(j)] += v[static_cast<size_t>(i)] * ent(m, i, j);
    return out;
}

bool is_primitive(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_nonneg(g, x);
    return g == 1;
}

Matrix row_matrix(const std::vector<Int>& v) {
    Matrix m(ringZ(), 1, static_cast<int>(v.size()));
    for (size_t j = 0; j < v.size(); ++j) put(m, 0, static_cast<int>(j), v[j]);
    return m;
}

// Extends a saturated flag basis (rows of W) by one row so that the new row
// together with W spans the saturation of span(W, u), and u lies in the new
// span. Requires u rationally outside span(W).
std::vector<Int> flag_extension(const Matrix& w, const std::vector<Int>& u) {
    const int i = w.rows(), n = w.cols();
    Matrix g = complete_basis(w);
    // coordinates of u in the basis given by the rows of g
    Matrix coords = row_matrix(u) * inverse(g);
    Int d = 0;
    for (int j = i; j < n; ++j) d = gcd_nonneg(d, ent(coords, 0, j));
    if (d == 0) throw InternalInvariantViolation("flag extension with dependent vector");
    std::vector<Int> out(static_cast<size_t>(n), 0);
    for (int j = i; j < n; ++j) {
        Int beta = ent(coords, 0, j) / d;
        for (int c = 0; c < n; ++c) out[static_cast<size_t>(c)] += beta * ent(g, j, c);
    }
    return out;
}

bool in_rational_span(const Matrix& w, const std::vector<Int>& u) {
    // rank comparison over Q via the Smith form rank of stacked rows
    Matrix stacked(ringZ(), w.rows() + 1, w.cols());
    stacked.set_block(0, 0, w);
    stacked.set_block(w.rows(), 0, row_matrix(u));
    SnfResult s = snf(stacked);
    int rank = 0;
    for (int i = 0; i < std::min(stacked.rows(), stacked.cols()); ++i)
        if (ent(s.D, i, i) != 0) ++rank;
    return rank == w.rows();
}

}  // namespace

ScalarityData scalarity_modulus(const Matrix& a) {
    if (a.ring().kind() != RingKind::integers) throw RingMismatch("scalarity_modulus needs Z");
    if (!a.is_square()) throw NonSquare("scalarity_modulus");
    const int n = a.rows();
    Int mu = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mu = gcd_nonneg(mu, i == j ? ent(a, i, i) - ent(a, 0, 0) : ent(a, i, j));
    if (mu == 0) return ScalarityData{0, ent(a, 0, 0), std::nullopt};
    Int c = ent(a, 0, 0) % mu;
    if (c < 0) c += mu;
    Matrix b0(ringZ(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            put(b0, i, j, (ent(a, i, j) - (i == j ? c : Int(0))) / mu);
    return ScalarityData{std::move(mu), std::move(c), std::move(b0)};
}

LRForm staircase_reduce_field(const Matrix& a) {
    const Ring& R = a.ring();
    if (!R.is_field()) throw NotAField("staircase_reduce_field");
    if (!a.is_square()) throw NonSquare("staircase_reduce_field");
    if (a.is_scalar()) throw ScalarInput("staircase_reduce_field: scalar matrix");
    const int n = a.rows();

    // candidate cyclic-start vectors: e_1..e_n, then e_i + e_j
    std::vector<Matrix> candidates;
    for (int i = 0; i < n; ++i) {
        Matrix v(R, 1, n);
        v.set(0, i, R.one());
        candidates.push_back(std::move(v));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix v(R, 1, n);
            v.set(0, i, R.one());
            v.set(0, j, R.one());
            candidates.push_back(std::move(v));
        }

    auto stack_rank = [&](const Matrix& w) {
        // row rank over the field
        Matrix work = w;
        int rank = 0;
        for (int col = 0; col < work.cols() && rank < work.rows(); ++col) {
            int piv = -1;
            for (int i = rank; i < work.rows(); ++i)
                if (!R.is_zero(work.at(i, col))) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            for (int j = 0; j < work.cols(); ++j) {
                Elem t = work.at(rank, j);
                work.set(rank, j, work.at(piv, j));
                work.set(piv, j, t);
            }
            for (int i = 0; i < work.rows(); ++i) {
                if (i == rank || R.is_zero(work.at(i, col))) continue;
                Elem f = R.div(work.at(i, col), work.at(rank, col));
                for (int j = 0; j < work.cols(); ++j)
                    work.set(i, j, R.sub(work.at(i, j), R.mul(f, work.at(rank, j))));
            }
            ++rank;
        }
        return rank;
    };

    Matrix flag(R, 0, n);
    for (const Matrix& v : candidates) {
        Matrix two(R, 2, n);
        two.set_block(0, 0, v);
        two.set_block(1, 0, v * a);
        if (stack_rank(two) == 2) {
            flag = std::move(two);
            break;
        }
    }
    if (flag.rows() == 0)
        throw InternalInvariantViolation("no cyclic-start vector found for non-scalar matrix");

    while (flag.rows() < n) {
        const int i = flag.rows();
        Matrix u = flag.block(i - 1, 0, 1, n) * a;
        Matrix bigger(R, i + 1, n);
        bigger.set_block(0, 0, flag);
        bigger.set_block(i, 0, u);
        if (stack_rank(bigger) == i + 1) {
            flag = std::move(bigger);
            continue;
        }
        for (int j = 0; j < n; ++j) {
            Matrix ej(R, 1, n);
            ej.set(0, j, R.one());
            bigger.set_block(i, 0, ej);
            if (stack_rank(bigger) == i + 1) break;
        }
        flag = bigger;
    }

    Matrix ginv = inverse(flag);
    Matrix b = flag * a * ginv;
    return LRForm{b, flag, std::move(ginv), b.at(0, 0), b.at(0, 1)};
}

LRForm lr_reduce_int(const Matrix& a, std::uint64_t seed, long budget) {
    if (a.ring().kind() != RingKind::integers) throw RingMismatch("lr_reduce_int needs Z");
    if (!a.is_square()) throw NonSquare("lr_reduce_int");
    if (a.is_scalar()) throw ScalarInput("lr_reduce_int: scalar matrix");
    const int n = a.rows();
    ScalarityData sd = scalarity_modulus(a);
    const Matrix& b0 = *sd.b0;

    // Search a primitive v with the 2x2 minors of [v; v*B0] coprime. The
    // deterministic sweep enumerates by increasing sup-norm; random primitive
    // candidates of growing norm are interleaved once norm 3 is exhausted.
    std::mt19937_64 rng(mix_seed(seed, 0x1af7e75u));
    long tried = 0;
    std::vector<Int> found;
    auto accept = [&](const std::vector<Int>& v) {
        if (!is_primitive(v)) return false;
        ++tried;
        return pair_minor_gcd(v, row_times(v, b0)) == 1;
    };
    auto random_candidate = [&](long long bound) {
        std::uniform_int_distribution<long long> dist(-bound, bound);
        std::vector<Int> v(static_cast<size_t>(n));
        for (auto& x : v) x = dist(rng);
        return v;
    };
    for (long long norm = 1; found.empty() && tried < budget; ++norm) {
        // all vectors with sup-norm exactly `norm`
        std::vector<long long> idx(static_cast<size_t>(n), -norm);
        for (;;) {
            long long sup = 0;
            for (long long x : idx) sup = std::max(sup, x < 0 ? -x : x);
            if (sup == norm) {
                std::vector<Int> v(idx.begin(), idx.end());
                if (accept(v)) {
                    found = std::move(v);
                    break;
                }
                if (norm > 3) {
                    std::vector<Int> rv = random_candidate(norm * norm);
                    if (accept(rv)) {
                        found = std::move(rv);
                        break;
                    }
                }
                if (tried >= budget) break;
            }
            int pos = n - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == norm) {
                idx[static_cast<size_t>(pos)] = -norm;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
        }
    }
    if (found.empty()) throw SearchExhausted("lr_reduce_int: primitive vector budget exceeded");

    Matrix flag = row_matrix(found);
    for (int i = 1; i < n; ++i) {
        std::vector<Int> u(static_cast<size_t>(n));
        {
            Matrix urow = flag.block(i - 1, 0, 1, n) * a;
            for (int j = 0; j < n; ++j) u[static_cast<size_t>(j)] = ent(urow, 0, j);
        }
        if (in_rational_span(flag, u)) {
            // smallest-index standard basis vector outside the current span
            bool ok = false;
            for (int j = 0; j < n && !ok; ++j) {
                std::vector<Int> ej(static_cast<size_t>(n), 0);
                ej[static_cast<size_t>(j)] = 1;
                if (!in_rational_span(flag, ej)) {
                    u = std::move(ej);
                    ok = true;
                }
            }
            if (!ok) throw InternalInvariantViolation("no basis vector extends the flag");
        }
        std::vector<Int> next = flag_extension(flag, u);
        Matrix bigger(ringZ(), i + 1, n);
        bigger.set_block(0, 0, flag);
        bigger.set_block(i, 0, row_matrix(next));
        flag = std::move(bigger);
    }

    Matrix ginv = inverse(flag);
    Matrix b = flag * a * ginv;
    LRPredicate check = is_lr_form(b);
    if (!check.ok || !(ent(b, 0, 1) == sd.mu))
        throw InternalInvariantViolation("lr_reduce_int produced a non-LR matrix");
    return LRForm{b, flag, std::move(ginv), b.at(0, 0), b.at(0, 1)};
}

LRPredicate is_lr_form(const Matrix& a) {
    if (!a.is_square()) throw NonSquare("is_lr_form");
    const Ring& R = a.ring();
    const int n = a.rows();
    const Elem a11 = a.at(0, 0);
    const Elem a12 = n >= 2 ? a.at(0, 1) : R.zero();
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (!R.is_zero(a.at(i, j))) return LRPredicate{false, a11, a12};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem rem = i == j ? R.sub(a.at(i, i), a11) : a.at(i, j);
            if (!R.div_exact(rem, a12).has_value()) return LRPredicate{false, a11, a12};
        }
    return LRPredicate{true, a11, a12};
}

}  // namespace commutant
