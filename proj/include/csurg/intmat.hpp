#pragma once

#include <optional>
#include <vector>

#include "csurg/rational.hpp"

namespace csurg {

// Dense integer matrix, row-major. Sizes here are tiny (surgery diagrams
// have a handful of components), so no attempt at sparsity.
class IMat {
public:
    IMat() = default;
    IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Int(0)) {}

    static IMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    IMat transposed() const;
    IMat operator*(const IMat& o) const;
    bool operator==(const IMat& o) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row(int dst, int src, const Int& c);  // row dst += c * row src
    void add_col(int dst, int src, const Int& c);
    void negate_row(int i);
    void negate_col(int i);

    Int det() const;  // exact, via fraction-free elimination

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Smith normal form U * M * V = D with U, V unimodular and the diagonal of D
// nonnegative with d_i | d_{i+1}. Column operations are applied only when a
// pivot has to move or a row must be cleared, so already-diagonal input keeps
// V = identity (sign fixes go into U); Smith coordinates of 1x1 presentations
// then agree with the meridian generator on the nose.
struct SmithResult {
    IMat U, D, V;
    std::vector<Int> invariant_factors;  // diagonal of D, zeros kept
};

SmithResult smith_normal_form(const IMat& m);

// Dense rational matrix for signature/solve work.
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}
    static QMat from_int(const IMat& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// One rational solution of A x = b, or nullopt when inconsistent. A may be
// singular; any particular solution is returned.
std::optional<std::vector<Rat>> solve_rational(const QMat& a, const std::vector<Rat>& b);

// Basis of the rational kernel of A.
std::vector<std::vector<Rat>> kernel_rational(const QMat& a);

// Signature of a symmetric rational matrix, computed by exact congruence
// diagonalization.
int signature(const QMat& a);

}  // namespace csurg
