#include "csurg/intmat.hpp"

#include <cstdlib>
#include <stdexcept>

namespace csurg {

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat IMat::transposed() const {
    IMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IMat IMat::operator*(const IMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

void IMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IMat::add_row(int dst, int src, const Int& c) {
    for (int k = 0; k < cols_; ++k) at(dst, k) += c * at(src, k);
}

void IMat::add_col(int dst, int src, const Int& c) {
    for (int k = 0; k < rows_; ++k) at(k, dst) += c * at(k, src);
}

void IMat::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IMat::negate_col(int j) {
    for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

Int IMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IMat m = *this;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = v / prev;  // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

// abs helper for pivot selection
Int iabs(const Int& v) { return v < 0 ? Int(-v) : v; }

// True when every entry of the trailing submatrix (from t) below/right of the
// pivot row/col is zero.
bool pivot_cleared(const IMat& d, int t) {
    for (int i = t + 1; i < d.rows(); ++i)
        if (d.at(i, t) != 0) return false;
    for (int j = t + 1; j < d.cols(); ++j)
        if (d.at(t, j) != 0) return false;
    return true;
}

}  // namespace

namespace {

// Clear the trailing block from position t0 to diagonal form. Each pivot
// round picks the entry of least absolute value, so pivots shrink strictly
// and the loop terminates.
void diagonalize_from(IMat& D, IMat& U, IMat& V, int t0) {
    const int n = std::min(D.rows(), D.cols());
    for (int t = t0; t < n; ++t) {
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = t; i < D.rows(); ++i)
                for (int j = t; j < D.cols(); ++j) {
                    if (D.at(i, j) == 0) continue;
                    if (pi < 0 || iabs(D.at(i, j)) < iabs(D.at(pi, pj))) { pi = i; pj = j; }
                }
            if (pi < 0) return;  // trailing block is zero
            if (pi != t) { D.swap_rows(t, pi); U.swap_rows(t, pi); }
            if (pj != t) { D.swap_cols(t, pj); V.swap_cols(t, pj); }

            bool reduced = true;
            for (int i = t + 1; i < D.rows(); ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = D.at(i, t) / D.at(t, t);
                D.add_row(i, t, -q);
                U.add_row(i, t, -q);
                if (D.at(i, t) != 0) reduced = false;
            }
            for (int j = t + 1; j < D.cols(); ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = D.at(t, j) / D.at(t, t);
                D.add_col(j, t, -q);
                V.add_col(j, t, -q);
                if (D.at(t, j) != 0) reduced = false;
            }
            if (reduced && pivot_cleared(D, t)) break;
        }
    }
}

}  // namespace

SmithResult smith_normal_form(const IMat& m) {
    SmithResult r;
    r.D = m;
    r.U = IMat::identity(m.rows());
    r.V = IMat::identity(m.cols());
    IMat& D = r.D;
    IMat& U = r.U;
    IMat& V = r.V;
    const int n = std::min(m.rows(), m.cols());

    diagonalize_from(D, U, V, 0);

    // Divisibility chain: fold a non-dividing later entry into the earlier
    // column and re-clear; each fix strictly shrinks |d_t|.
    for (int t = 0; t + 1 < n;) {
        // zeros sort to the end
        if (D.at(t, t) == 0) {
            int s = -1;
            for (int k = t + 1; k < n; ++k)
                if (D.at(k, k) != 0) { s = k; break; }
            if (s < 0) break;
            D.swap_rows(t, s); U.swap_rows(t, s);
            D.swap_cols(t, s); V.swap_cols(t, s);
        }
        int bad = -1;
        for (int s = t + 1; s < n; ++s)
            if (D.at(s, s) != 0 && D.at(s, s) % D.at(t, t) != 0) { bad = s; break; }
        if (bad < 0) { ++t; continue; }
        D.add_col(t, bad, 1);
        V.add_col(t, bad, 1);
        diagonalize_from(D, U, V, t);
    }

    // Nonnegative diagonal; sign fixes on the U side.
    for (int t = 0; t < n; ++t)
        if (D.at(t, t) < 0) { D.negate_row(t); U.negate_row(t); }

    r.invariant_factors.clear();
    for (int t = 0; t < n; ++t) r.invariant_factors.push_back(D.at(t, t));
    return r;
}

QMat QMat::from_int(const IMat& m) {
    QMat q(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) q.at(i, j) = Rat(m.at(i, j));
    return q;
}

namespace {

// Row-reduce [A | b...] in place; returns pivot column per row.
std::vector<int> row_echelon(QMat& a, int lead_cols) {
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < lead_cols && row < a.rows(); ++col) {
        int p = -1;
        for (int i = row; i < a.rows(); ++i)
            if (a.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
        Rat inv = a.at(row, col);
        for (int j = 0; j < a.cols(); ++j) a.at(row, j) /= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    return pivot_col;
}

}  // namespace

std::optional<std::vector<Rat>> solve_rational(const QMat& a, const std::vector<Rat>& b) {
    if (int(b.size()) != a.rows()) throw std::invalid_argument("solve shape mismatch");
    QMat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = row_echelon(aug, a.cols());
    // Inconsistency: zero row with nonzero rhs.
    for (int i = int(pivots.size()); i < a.rows(); ++i)
        if (aug.at(i, a.cols()) != 0) return std::nullopt;
    std::vector<Rat> x(a.cols(), Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), a.cols());
    return x;
}

std::vector<std::vector<Rat>> kernel_rational(const QMat& a) {
    QMat m = a;
    auto pivots = row_echelon(m, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(a.cols(), Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

int signature(const QMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("signature of non-square matrix");
    int n = a.rows();
    QMat m = a;
    int sig = 0;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        // pick an unprocessed index with nonzero diagonal, creating one if needed
        int k = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && m.at(i, i) != 0) { k = i; break; }
        if (k < 0) {
            // all remaining diagonal entries zero; find an off-diagonal entry
            int bi = -1, bj = -1;
            for (int i = 0; i < n && bi < 0; ++i) {
                if (done[i]) continue;
                for (int j = i + 1; j < n; ++j)
                    if (!done[j] && m.at(i, j) != 0) { bi = i; bj = j; break; }
            }
            if (bi < 0) break;  // rest of the form is zero
            // row/col i += row/col j makes the (i,i) entry 2*a_ij != 0
            for (int c = 0; c < n; ++c) m.at(bi, c) += m.at(bj, c);
            for (int r = 0; r < n; ++r) m.at(r, bi) += m.at(r, bj);
            k = bi;
        }
        // clear row/col k against the diagonal pivot
        Rat piv = m.at(k, k);
        for (int i = 0; i < n; ++i) {
            if (i == k || done[i] || m.at(i, k) == 0) continue;
            Rat f = m.at(i, k) / piv;
            for (int c = 0; c < n; ++c) m.at(i, c) -= f * m.at(k, c);
            for (int r = 0; r < n; ++r) m.at(r, i) -= f * m.at(r, k);
        }
        sig += sign_of(piv);
        done[k] = true;
    }
    return sig;
}

}  // namespace csurg
