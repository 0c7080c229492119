#pragma once

#include <vector>

#include "artmod/module.hpp"
#include "artmod/rng.hpp"

namespace artmod::testing {

inline Rat q(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Mat mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rat>> r;
    for (const auto& row : rows) {
        std::vector<Rat> v;
        for (long x : row) v.emplace_back(x);
        r.push_back(std::move(v));
    }
    return Mat::from_rows(r);
}

inline Vec vec(const std::vector<long>& entries) {
    Vec v;
    for (long x : entries) v.emplace_back(x);
    return v;
}

/// B/(x^2, y^3, xy) on the basis {1, x, y, y^2}, built by hand so tests of
/// the dual worked example do not depend on the AS constructors.
inline ModulePtr quotient_x2_y3_xy() {
    Mat x = mat({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    Mat y = mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}});
    return share(ArtinianModule(2, {x, y}));
}

/// Direct sum along the block diagonal.
inline ModulePtr direct_sum(const ArtinianModule& a, const ArtinianModule& b) {
    std::vector<Mat> actions;
    for (int i = 0; i < a.g(); ++i) {
        Mat m(a.dim() + b.dim(), a.dim() + b.dim());
        for (int r = 0; r < a.dim(); ++r)
            for (int c = 0; c < a.dim(); ++c) m(r, c) = a.action(i)(r, c);
        for (int r = 0; r < b.dim(); ++r)
            for (int c = 0; c < b.dim(); ++c) m(a.dim() + r, a.dim() + c) = b.action(i)(r, c);
        actions.push_back(std::move(m));
    }
    return share(ArtinianModule(a.g(), std::move(actions)));
}

inline Mat random_matrix(SplitMix64& rng, int rows, int cols, int height = 5) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Rat(long(rng.in_range(-height, height)));
    return m;
}

inline Mat random_rational_matrix(SplitMix64& rng, int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = q(rng.in_range(-20, 20), rng.in_range(1, 9));
    return m;
}

}  // namespace artmod::testing
