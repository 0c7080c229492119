#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "artmod/rational.hpp"

namespace artmod {

using Vec = std::vector<Rat>;

/// Dense row-major matrix over exact rationals.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
    Mat(int rows, int cols, std::vector<Rat> entries);

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    static Mat from_rows(const std::vector<std::vector<Rat>>& rows);
    static Mat column(const Vec& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;

    Mat transpose() const;
    Vec col(int j) const;
    Vec row(int i) const;
    void set_col(int j, const Vec& v);

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;  // zero-skipping; exploits sparsity of o
    Vec apply(const Vec& v) const;      // this * v, zero-skipping on v
    Mat scaled(const Rat& c) const;

    /// Kronecker product; index convention (i*o.rows+k, j*o.cols+l).
    Mat kron(const Mat& o) const;

    /// Horizontal / vertical concatenation.
    static Mat hcat(const Mat& a, const Mat& b);
    static Mat vcat(const Mat& a, const Mat& b);
    Mat cols_subset(const std::vector<int>& idx) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

/// Reduced row echelon form plus pivot column indices. RREF is unique,
/// so the result does not depend on the pivoting order used internally.
std::pair<Mat, std::vector<int>> rref(const Mat& m);

int rank(const Mat& m);

/// Columns form a basis of the exact null space. Each basis vector is
/// scaled so its first nonzero entry is 1.
Mat kernel_basis(const Mat& m);

/// One exact solution of a*x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Columnwise solve a*X = b; nullopt when any column is inconsistent.
std::optional<Mat> solve_matrix(const Mat& a, const Mat& b);

/// Exact determinant; throws ValidationError on non-square input.
Rat det(const Mat& m);

/// Inverse; nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// Basis of the column space: the leftmost independent columns of m.
Mat column_space_basis(const Mat& m);

bool is_zero_vec(const Vec& v);

}  // namespace artmod
