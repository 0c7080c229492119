#include "artmod/matrix.hpp"

#include <algorithm>

#include "artmod/errors.hpp"

namespace artmod {

Mat::Mat(int rows, int cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != size_t(rows) * cols)
        throw ValidationError("matrix entry count does not match rows*cols");
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c)
            throw ValidationError("ragged rows in matrix literal");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::column(const Vec& v) {
    Mat m(int(v.size()), 1);
    for (int i = 0; i < int(v.size()); ++i) m(i, 0) = v[i];
    return m;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Mat::is_zero() const {
    for (const Rat& x : data_)
        if (x != 0) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vec Mat::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Mat::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void Mat::set_col(int j, const Vec& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("shape mismatch in +");
    Mat r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("shape mismatch in -");
    Mat r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

// The action matrices this engine multiplies are mostly shift operators and
// their low powers, so skipping zero entries of the right factor (driving the
// loop from B) makes products of nilpotent operators near-linear instead of
// cubic. Column adjacency of A is built once per call.
Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw ValidationError("shape mismatch in *");
    Mat r(rows_, o.cols_);
    // column lists of A: for each k, the nonzero (i, A(i,k))
    std::vector<std::vector<std::pair<int, const Rat*>>> acol(cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k)
            if ((*this)(i, k) != 0) acol[k].emplace_back(i, &(*this)(i, k));
    for (int k = 0; k < o.rows_; ++k) {
        if (acol[k].empty()) continue;
        for (int j = 0; j < o.cols_; ++j) {
            const Rat& b = o(k, j);
            if (b == 0) continue;
            for (const auto& [i, a] : acol[k]) r(i, j) += *a * b;
        }
    }
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw ValidationError("shape mismatch in apply");
    Vec r(rows_);
    for (int k = 0; k < cols_; ++k) {
        if (v[k] == 0) continue;
        for (int i = 0; i < rows_; ++i) {
            const Rat& a = (*this)(i, k);
            if (a != 0) r[i] += a * v[k];
        }
    }
    return r;
}

Mat Mat::scaled(const Rat& c) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
    return r;
}

Mat Mat::kron(const Mat& o) const {
    Mat r(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Rat& a = (*this)(i, j);
            if (a == 0) continue;
            for (int k = 0; k < o.rows_; ++k)
                for (int l = 0; l < o.cols_; ++l) {
                    const Rat& b = o(k, l);
                    if (b == 0) continue;
                    r(i * o.rows_ + k, j * o.cols_ + l) = a * b;
                }
        }
    return r;
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) throw ValidationError("row mismatch in hcat");
    Mat r(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    }
    return r;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
    if (a.cols_ != b.cols_) throw ValidationError("column mismatch in vcat");
    Mat r(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
    return r;
}

Mat Mat::cols_subset(const std::vector<int>& idx) const {
    Mat r(rows_, int(idx.size()));
    for (int j = 0; j < int(idx.size()); ++j)
        for (int i = 0; i < rows_; ++i) r(i, j) = (*this)(i, idx[j]);
    return r;
}

namespace {

// In-place Gauss-Jordan. Prefers a +-1 pivot in the current column to keep
// intermediate entries small; the reduced form itself is basis-independent.
void rref_in_place(Mat& a, std::vector<int>& pivots) {
    const int rows = a.rows(), cols = a.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            if (piv < 0) piv = i;
            if (a(i, c) == 1 || a(i, c) == -1) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < cols; ++j) std::swap(a(r, j), a(piv, j));
        if (a(r, c) != 1) {
            Rat inv = 1 / a(r, c);
            a(r, c) = 1;
            for (int j = c + 1; j < cols; ++j)
                if (a(r, j) != 0) a(r, j) *= inv;
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rat f = a(i, c);
            if (f == 0) continue;
            a(i, c) = 0;
            for (int j = c + 1; j < cols; ++j)
                if (a(r, j) != 0) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
}

}  // namespace

std::pair<Mat, std::vector<int>> rref(const Mat& m) {
    Mat a = m;
    std::vector<int> pivots;
    rref_in_place(a, pivots);
    return {std::move(a), std::move(pivots)};
}

int rank(const Mat& m) {
    return int(rref(m).second.size());
}

Mat kernel_basis(const Mat& m) {
    auto [r, pivots] = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat basis(n, int(free_cols.size()));
    for (int k = 0; k < int(free_cols.size()); ++k) {
        int f = free_cols[k];
        basis(f, k) = 1;
        for (int p = 0; p < int(pivots.size()); ++p) basis(pivots[p], k) = -r(p, f);
        // first nonzero entry = 1
        for (int i = 0; i < n; ++i) {
            if (basis(i, k) == 0) continue;
            if (basis(i, k) != 1) {
                Rat inv = 1 / basis(i, k);
                for (int l = i; l < n; ++l)
                    if (basis(l, k) != 0) basis(l, k) *= inv;
            }
            break;
        }
    }
    return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    auto x = solve_matrix(a, Mat::column(b));
    if (!x) return std::nullopt;
    return x->col(0);
}

std::optional<Mat> solve_matrix(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw ValidationError("shape mismatch in solve");
    auto [r, pivots] = rref(Mat::hcat(a, b));
    // inconsistent iff some pivot lands in the appended block
    for (int c : pivots)
        if (c >= a.cols()) return std::nullopt;
    Mat x(a.cols(), b.cols());
    for (int p = 0; p < int(pivots.size()); ++p)
        for (int j = 0; j < b.cols(); ++j) x(pivots[p], j) = r(p, a.cols() + j);
    return x;
}

Rat det(const Mat& m) {
    if (m.rows() != m.cols()) throw ValidationError("determinant of non-square matrix");
    const int n = m.rows();
    Mat a = m;
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i) {
            if (a(i, c) == 0) continue;
            if (piv < 0) piv = i;
            if (a(i, c) == 1 || a(i, c) == -1) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            for (int j = c; j < n; ++j) std::swap(a(c, j), a(piv, j));
            d = -d;
        }
        d *= a(c, c);
        Rat inv = 1 / a(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) * inv;
            a(i, c) = 0;
            for (int j = c + 1; j < n; ++j)
                if (a(c, j) != 0) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw ValidationError("inverse of non-square matrix");
    const int n = m.rows();
    auto [r, pivots] = rref(Mat::hcat(m, Mat::identity(n)));
    if (int(pivots.size()) != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

Mat column_space_basis(const Mat& m) {
    auto pivots = rref(m).second;
    return m.cols_subset(pivots);
}

bool is_zero_vec(const Vec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace artmod
