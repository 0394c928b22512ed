#pragma once

#include "ggl/ring.hpp"

#include <vector>

namespace ggl {

/// Dense exact integer matrix, just big enough for character-lattice work.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Int(0)) {}

    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    std::vector<Int> row(int i) const;
    std::vector<Int> col(int j) const;

    IntMat operator*(const IntMat& o) const;
    IntMat transposed() const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const Int& q);  // row dst += q * row src
    void add_col_multiple(int dst, int src, const Int& q);
    void negate_row(int i);
    void negate_col(int j);

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

Int det_bareiss(IntMat a);

/// Row Hermite normal form: u * a = h with u unimodular, h in row echelon
/// form with positive pivots and entries above each pivot reduced into
/// [0, pivot).
struct RowHnf {
    IntMat h;
    IntMat u;
    int rank = 0;
    std::vector<int> pivot_cols;
};
RowHnf row_hnf(const IntMat& a);

/// Canonical representative of v modulo the row lattice of hnf.h.
std::vector<Int> reduce_mod_row_lattice(const RowHnf& hnf, std::vector<Int> v);
bool in_row_lattice(const RowHnf& hnf, const std::vector<Int>& v);

/// Basis (as rows) of the lattice { x : x * a = 0 }. The result is a basis of
/// the full integer kernel, not just a finite-index sublattice.
IntMat left_kernel(const IntMat& a);

/// Smith normal form: u * a * v = d diagonal with d_1 | d_2 | ...
struct Snf {
    IntMat d, u, v;
    std::vector<Int> diagonal() const;
};
Snf smith_normal_form(IntMat a);

/// For a nonzero row v: unimodular u with v * u = (g, 0, ..., 0), g = gcd > 0.
/// uinv is the exact inverse of u.
struct UnimodularSplit {
    IntMat u, uinv;
    Int g;
};
UnimodularSplit split_row(const std::vector<Int>& v);

int rank_over_q(IntMat a);

namespace f2 {

using Mat = std::vector<std::vector<int>>;  // entries 0/1

int rank(Mat a);
/// Rows spanning { x : x * a = 0 } over F_2.
Mat left_kernel(const Mat& a);
/// Given a nonzero row v of length r, returns an invertible r x r matrix whose
/// first column c satisfies v*c = 1 and whose remaining columns span ker(v).
Mat complete_to_basis(const std::vector<int>& v);
Mat multiply(const Mat& a, const Mat& b);
Mat inverse(Mat a);

}  // namespace f2

}  // namespace ggl
