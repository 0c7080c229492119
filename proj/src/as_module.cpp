#include "artmod/as_module.hpp"

#include <algorithm>

#include "artmod/errors.hpp"

namespace artmod {

namespace {
constexpr long kMaxModuleDim = 4096;
}

ASShape::ASShape(std::vector<int> e) : exponents(std::move(e)) {
    for (int x : exponents)
        if (x < 1) throw ValidationError("shape exponents must be >= 1");
}

long ASShape::total_dim() const {
    long d = 1;
    for (int x : exponents) {
        d *= x;
        if (d > kMaxModuleDim)
            throw SizeError("shape dimension exceeds the supported limit");
    }
    return d;
}

MultiIndexBox::MultiIndexBox(std::vector<int> lims) : limits(std::move(lims)) {
    strides_.assign(limits.size(), 1);
    for (int i = int(limits.size()) - 1; i >= 0; --i) {
        if (limits[i] < 0) throw ValidationError("negative box limit");
        strides_[i] = size_;
        size_ *= limits[i];
        if (size_ > kMaxModuleDim * 4)
            throw SizeError("index box exceeds the supported limit");
    }
}

int MultiIndexBox::index(const std::vector<int>& a) const {
    int k = 0;
    for (size_t i = 0; i < limits.size(); ++i) k += a[i] * strides_[i];
    return k;
}

std::vector<int> MultiIndexBox::at(int k) const {
    std::vector<int> a(limits.size());
    for (size_t i = 0; i < limits.size(); ++i) {
        a[i] = k / strides_[i];
        k %= strides_[i];
    }
    return a;
}

ArtinianModule as_module(const ASShape& shape) {
    const int g = shape.g();
    const int dim = int(shape.total_dim());
    MultiIndexBox box(shape.exponents);
    std::vector<Mat> actions(g, Mat::zero(dim, dim));
    for (int k = 0; k < dim; ++k) {
        std::vector<int> a = box.at(k);
        for (int i = 0; i < g; ++i) {
            if (a[i] + 1 >= shape.exponents[i]) continue;
            a[i] += 1;
            actions[i](box.index(a), k) = 1;
            a[i] -= 1;
        }
    }
    return ArtinianModule(g, std::move(actions));
}

ModulePtr as_module_ptr(const ASShape& shape) {
    return share(as_module(shape));
}

ModuleMap as_self_duality(const ASShape& shape) {
    const int dim = int(shape.total_dim());
    MultiIndexBox box(shape.exponents);
    Mat f(dim, dim);
    for (int k = 0; k < dim; ++k) {
        std::vector<int> a = box.at(k);
        for (int i = 0; i < shape.g(); ++i) a[i] = shape.exponents[i] - 1 - a[i];
        f(box.index(a), k) = 1;
    }
    ModulePtr m = as_module_ptr(shape);
    return ModuleMap(m, matlis_dual(m), std::move(f));
}

namespace {

// All height-bounded integer directions, one projective representative each
// (first nonzero entry positive), in lexicographic order.
std::vector<std::vector<long>> normalized_grid(int g, int height) {
    std::vector<std::vector<long>> out;
    std::vector<long> c(g, -height);
    while (true) {
        bool zero = true, lead_positive = false;
        for (long x : c) {
            if (x != 0) {
                zero = false;
                lead_positive = x > 0;
                break;
            }
        }
        if (!zero && lead_positive) out.push_back(c);
        int i = g - 1;
        while (i >= 0 && c[i] == height) c[i--] = -height;
        if (i < 0) break;
        ++c[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

Vec to_rat_vec(const std::vector<long>& c) {
    Vec v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = Rat(long(c[i]));
    return v;
}

}  // namespace

std::pair<Vec, int> minimal_direction_search(const ArtinianModule& n, const Vec& a,
                                             const Mat& excluded, int height) {
    if (height < 1) throw ValidationError("search height must be >= 1");
    const int base_rank = excluded.cols() ? rank(excluded) : 0;
    std::optional<Vec> best;
    int best_exp = 0;
    for (const auto& c : normalized_grid(n.g(), height)) {
        Vec dir = to_rat_vec(c);
        if (excluded.cols()) {
            Mat ext = Mat::hcat(excluded, Mat::column(dir));
            if (rank(ext) == base_rank) continue;
        }
        int e = annihilator_exponent(n, dir, a);
        if (!best || e < best_exp) {
            best = dir;
            best_exp = e;
        }
    }
    if (!best) throw ValidationError("no admissible direction in the search grid");
    return {*best, best_exp};
}

ASExtension as_extension(const ModulePtr& m, int search_height) {
    if (!has_no_decomposable_submodules(m))
        throw ValidationError(
            "AS-extension requires a one-dimensional socle (no decomposable submodules)");
    const int g = m->g();
    ModulePtr n = matlis_dual(m);
    auto gen = cyclic_generator(n);
    if (!gen)
        throw ValidationError("internal: dual of an indecomposable-socle module must be cyclic");
    const Vec& a = *gen;

    std::vector<Vec> directions;
    std::vector<int> exponents;
    Mat chosen(g, 0);
    for (int i = 0; i < g; ++i) {
        auto [dir, e] = minimal_direction_search(*n, a, chosen, search_height);
        directions.push_back(dir);
        exponents.push_back(e);
        chosen = Mat::hcat(chosen, Mat::column(dir));
    }

    ASShape shape(exponents);
    MultiIndexBox box(shape.exponents);
    const int bar_dim = box.size();

    // Surjection B/J -> N, b -> b*a: column alpha is D^alpha a in the dual.
    std::vector<Mat> dual_dirs;
    for (int i = 0; i < g; ++i) dual_dirs.push_back(n->direction_action(directions[i]));
    Mat p(n->dim(), bar_dim);
    p.set_col(0, a);
    for (int k = 1; k < bar_dim; ++k) {
        std::vector<int> alpha = box.at(k);
        int i = 0;
        while (alpha[i] == 0) ++i;
        alpha[i] -= 1;
        p.set_col(k, dual_dirs[i].apply(p.col(box.index(alpha))));
    }

    // Dualize and straighten through the Koszul pairing to land in the
    // AS-module itself rather than its dual.
    ModuleMap sigma = as_self_duality(shape);
    Mat embedding_matrix = sigma.matrix().transpose() * p.transpose();

    std::vector<Mat> twisted_actions;
    for (int i = 0; i < g; ++i) twisted_actions.push_back(m->direction_action(directions[i]));
    ModulePtr source = share(ArtinianModule(g, std::move(twisted_actions)));

    ModuleMap embedding(source, sigma.source(), std::move(embedding_matrix));
    if (!embedding.is_injective())
        throw FalsificationError("AS-extension embedding failed the injectivity certificate");
    for (int i = 0; i < g; ++i)
        if (annihilator_exponent(*n, directions[i], a) != exponents[i])
            throw FalsificationError("AS-extension exponent certificate failed");
    return ASExtension{m, shape, std::move(directions), std::move(embedding), search_height};
}

}  // namespace artmod
