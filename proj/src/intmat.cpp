#include "ggl/intmat.hpp"

#include <algorithm>

namespace ggl {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
    int r = (int)rows.size();
    int c = r == 0 ? 0 : (int)rows[0].size();
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if ((int)rows[i].size() != c) throw std::invalid_argument("intmat: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMat::row(int i) const {
    std::vector<Int> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Int> IntMat::col(int j) const {
    std::vector<Int> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("intmat: dimension mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

IntMat IntMat::transposed() const {
    IntMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::add_row_multiple(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void IntMat::add_col_multiple(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

void IntMat::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMat::negate_col(int j) {
    for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

Int det_bareiss(IntMat a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("intmat: det of non-square matrix");
    int n = a.rows();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

RowHnf row_hnf(const IntMat& a) {
    RowHnf res;
    res.h = a;
    res.u = IntMat::identity(a.rows());
    IntMat& h = res.h;
    IntMat& u = res.u;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        // gcd out column c below row r
        while (true) {
            int piv = -1;
            Int best = 0;
            for (int i = r; i < a.rows(); ++i) {
                Int v = abs(h.at(i, c));
                if (v != 0 && (piv < 0 || v < best)) {
                    piv = i;
                    best = v;
                }
            }
            if (piv < 0) break;
            h.swap_rows(r, piv);
            u.swap_rows(r, piv);
            if (h.at(r, c) < 0) {
                h.negate_row(r);
                u.negate_row(r);
            }
            bool done = true;
            for (int i = r + 1; i < a.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = h.at(i, c) / h.at(r, c);
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h.at(r, c) != 0) {
            // reduce entries above the pivot into [0, pivot)
            for (int i = 0; i < r; ++i) {
                Int q = h.at(i, c) / h.at(r, c);
                if (h.at(i, c) - q * h.at(r, c) < 0) q -= 1;
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
            }
            res.pivot_cols.push_back(c);
            ++r;
        }
    }
    res.rank = r;
    return res;
}

std::vector<Int> reduce_mod_row_lattice(const RowHnf& hnf, std::vector<Int> v) {
    if ((int)v.size() != hnf.h.cols()) throw std::invalid_argument("intmat: vector length mismatch");
    for (int i = 0; i < hnf.rank; ++i) {
        int c = hnf.pivot_cols[i];
        Int p = hnf.h.at(i, c);
        Int q = v[c] / p;
        if (v[c] - q * p < 0) q -= 1;  // canonical entry in [0, p)
        if (q != 0)
            for (int j = 0; j < hnf.h.cols(); ++j) v[j] -= q * hnf.h.at(i, j);
    }
    return v;
}

bool in_row_lattice(const RowHnf& hnf, const std::vector<Int>& v) {
    auto r = reduce_mod_row_lattice(hnf, v);
    return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

IntMat left_kernel(const IntMat& a) {
    RowHnf hnf = row_hnf(a);
    int k = a.rows() - hnf.rank;
    IntMat res(k, a.rows());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < a.rows(); ++j) res.at(i, j) = hnf.u.at(hnf.rank + i, j);
    return res;
}

std::vector<Int> Snf::diagonal() const {
    std::vector<Int> out;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

Snf smith_normal_form(IntMat a) {
    Snf s;
    s.u = IntMat::identity(a.rows());
    s.v = IntMat::identity(a.cols());
    int n = std::min(a.rows(), a.cols());
    for (int k = 0; k < n; ++k) {
        while (true) {
            // move a least-magnitude nonzero entry of the trailing block to (k,k)
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = k; i < a.rows(); ++i)
                for (int j = k; j < a.cols(); ++j) {
                    Int v = abs(a.at(i, j));
                    if (v != 0 && (pi < 0 || v < best)) {
                        pi = i;
                        pj = j;
                        best = v;
                    }
                }
            if (pi < 0) {
                s.d = a;
                return s;
            }
            a.swap_rows(k, pi);
            s.u.swap_rows(k, pi);
            a.swap_cols(k, pj);
            s.v.swap_cols(k, pj);
            bool clean = true;
            for (int i = k + 1; i < a.rows(); ++i) {
                Int q = a.at(i, k) / a.at(k, k);
                a.add_row_multiple(i, k, -q);
                s.u.add_row_multiple(i, k, -q);
                if (a.at(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < a.cols(); ++j) {
                Int q = a.at(k, j) / a.at(k, k);
                a.add_col_multiple(j, k, -q);
                s.v.add_col_multiple(j, k, -q);
                if (a.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // enforce divisibility d_k | a(i,j) for the trailing block
            bool fixed = false;
            for (int i = k + 1; i < a.rows() && !fixed; ++i)
                for (int j = k + 1; j < a.cols() && !fixed; ++j)
                    if (a.at(i, j) % a.at(k, k) != 0) {
                        a.add_row_multiple(k, i, 1);
                        s.u.add_row_multiple(k, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (a.at(k, k) < 0) {
            a.negate_row(k);
            s.u.negate_row(k);
        }
    }
    s.d = a;
    return s;
}

UnimodularSplit split_row(const std::vector<Int>& v) {
    int n = (int)v.size();
    bool nonzero = std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; });
    if (!nonzero) throw std::invalid_argument("intmat: split_row on zero vector");
    IntMat w(1, n);
    for (int j = 0; j < n; ++j) w.at(0, j) = v[j];
    UnimodularSplit res;
    res.u = IntMat::identity(n);
    res.uinv = IntMat::identity(n);
    // column ops driving w to (g, 0, ..., 0); each op mirrored inversely on uinv rows
    auto swap_op = [&](int i, int j) {
        w.swap_cols(i, j);
        res.u.swap_cols(i, j);
        res.uinv.swap_rows(i, j);
    };
    auto add_op = [&](int dst, int src, const Int& q) {
        // col_dst += q * col_src   <=>  inverse: row_src -= q * row_dst
        w.add_col_multiple(dst, src, q);
        res.u.add_col_multiple(dst, src, q);
        res.uinv.add_row_multiple(src, dst, -q);
    };
    auto neg_op = [&](int j) {
        w.negate_col(j);
        res.u.negate_col(j);
        res.uinv.negate_row(j);
    };
    while (true) {
        int piv = -1;
        Int best = 0;
        for (int j = 0; j < n; ++j) {
            Int a = abs(w.at(0, j));
            if (a != 0 && (piv < 0 || a < best)) {
                piv = j;
                best = a;
            }
        }
        swap_op(0, piv);
        if (w.at(0, 0) < 0) neg_op(0);
        bool done = true;
        for (int j = 1; j < n; ++j) {
            if (w.at(0, j) == 0) continue;
            Int q = w.at(0, j) / w.at(0, 0);
            add_op(j, 0, -q);
            if (w.at(0, j) != 0) done = false;
        }
        if (done) break;
    }
    res.g = w.at(0, 0);
    return res;
}

int rank_over_q(IntMat a) {
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        a.swap_rows(r, piv);
        for (int i = r + 1; i < a.rows(); ++i) {
            if (a.at(i, c) == 0) continue;
            Int x = a.at(i, c), y = a.at(r, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) = a.at(i, j) * y - a.at(r, j) * x;
        }
        ++r;
    }
    return r;
}

namespace f2 {

int rank(Mat a) {
    if (a.empty()) return 0;
    int rows = (int)a.size(), cols = (int)a[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = 0; i < rows; ++i)
            if (i != r && a[i][c])
                for (int j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
        ++r;
    }
    return r;
}

Mat left_kernel(const Mat& a) {
    int rows = (int)a.size();
    if (rows == 0) return {};
    int cols = (int)a[0].size();
    // reduce [a | I]
    Mat m(rows, std::vector<int>(cols + rows, 0));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m[i][j] = a[i][j] & 1;
        m[i][cols + i] = 1;
    }
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (int j = 0; j < cols + rows; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    Mat out;
    for (int i = r; i < rows; ++i)
        out.emplace_back(m[i].begin() + cols, m[i].end());
    return out;
}

Mat complete_to_basis(const std::vector<int>& v) {
    int n = (int)v.size();
    int lead = -1;
    for (int i = 0; i < n; ++i)
        if (v[i] & 1) {
            lead = i;
            break;
        }
    if (lead < 0) throw std::invalid_argument("f2: zero vector");
    Mat kv(1, std::vector<int>(n));
    for (int i = 0; i < n; ++i) kv[0][i] = v[i] & 1;
    Mat ker = left_kernel(Mat{});  // placeholder, replaced below
    // kernel of v as a 1 x n map: vectors x with sum v_i x_i = 0
    Mat vm(n, std::vector<int>(1));
    for (int i = 0; i < n; ++i) vm[i][0] = v[i] & 1;
    ker = left_kernel(vm);  // rows x with x * vm = 0, i.e. v . x = 0
    Mat basis(n, std::vector<int>(n, 0));
    // first column: section c with v*c = 1 (unit vector at lead)
    basis[lead][0] = 1;
    for (int k = 0; k < (int)ker.size(); ++k)
        for (int i = 0; i < n; ++i) basis[i][k + 1] = ker[k][i];
    return basis;
}

Mat multiply(const Mat& a, const Mat& b) {
    int n = (int)a.size(), m = (int)b[0].size(), k = (int)b.size();
    Mat r(n, std::vector<int>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t)
            if (a[i][t])
                for (int j = 0; j < m; ++j) r[i][j] ^= b[t][j];
    return r;
}

Mat inverse(Mat a) {
    int n = (int)a.size();
    Mat inv(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::invalid_argument("f2: singular matrix");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        for (int i = 0; i < n; ++i)
            if (i != c && a[i][c])
                for (int j = 0; j < n; ++j) {
                    a[i][j] ^= a[c][j];
                    inv[i][j] ^= inv[c][j];
                }
    }
    return inv;
}

}  // namespace f2

}  // namespace ggl
