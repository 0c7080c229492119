#include "artmod/pontryagin.hpp"

#include <algorithm>
#include <map>

#include "artmod/errors.hpp"

namespace artmod {

namespace {
constexpr long kMaxProductDim = 4096;
}

ArtinianModule pontryagin_product(const ArtinianModule& m, const ArtinianModule& m2) {
    if (m.g() != m2.g())
        throw ValidationError("Pontryagin product of modules over different rings (g=" +
                              std::to_string(m.g()) + " vs g=" + std::to_string(m2.g()) + ")");
    long dim = long(m.dim()) * m2.dim();
    if (dim > kMaxProductDim)
        throw SizeError("product dimension " + std::to_string(dim) +
                        " exceeds the supported limit " + std::to_string(kMaxProductDim));
    Mat il = Mat::identity(m.dim());
    Mat ir = Mat::identity(m2.dim());
    std::vector<Mat> actions;
    actions.reserve(m.g());
    for (int i = 0; i < m.g(); ++i)
        actions.push_back(m.action(i).kron(ir) + il.kron(m2.action(i)));
    return ArtinianModule(m.g(), std::move(actions));
}

ModulePtr pontryagin_product_ptr(const ModulePtr& m, const ModulePtr& m2) {
    return share(pontryagin_product(*m, *m2));
}

ModuleMap product_map(const ModuleMap& f, const ModuleMap& f2) {
    ModulePtr src = pontryagin_product_ptr(f.source(), f2.source());
    ModulePtr tgt = pontryagin_product_ptr(f.target(), f2.target());
    return ModuleMap(std::move(src), std::move(tgt), f.matrix().kron(f2.matrix()));
}

std::vector<std::pair<std::vector<int>, ASShape>> cg_block_shapes(const ASShape& e,
                                                                  const ASShape& f) {
    if (e.g() != f.g()) throw ValidationError("shape mismatch in cg_block_shapes");
    const int g = e.g();
    std::vector<int> eps(g);
    for (int i = 0; i < g; ++i) eps[i] = std::min(e.exponents[i], f.exponents[i]);
    MultiIndexBox box(eps);
    std::vector<std::pair<std::vector<int>, ASShape>> out;
    long total = 0;
    for (int k = 0; k < box.size(); ++k) {
        std::vector<int> idx = box.at(k);
        std::vector<int> s(g);
        for (int i = 0; i < g; ++i)
            s[i] = e.exponents[i] + f.exponents[i] - 1 - 2 * idx[i];
        ASShape shape(std::move(s));
        total += shape.total_dim();
        out.emplace_back(std::move(idx), std::move(shape));
    }
    if (total != e.total_dim() * f.total_dim())
        throw FalsificationError("block dimension identity failed in cg_block_shapes");
    return out;
}

namespace {

void check_fact_range(int e, int f, int d) {
    if (!(0 <= d && d <= e - 1 && e <= f))
        throw ValidationError("fact matrices need 0 <= d <= e-1 <= f-1");
}

// Shared entry layout of the two displayed systems: coefficient of a_{d-c}
// in c_{r+1} is C^m_{e-d-1-r+c}.
Mat fact_matrix(int e, int f, int d, int power, int rows) {
    Mat m(rows, d + 1);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c <= d; ++c)
            m(r, c) = binomial_coeff(power, e - d - 1 - r + c);
    return m;
}

}  // namespace

Mat fact1_matrix(int e, int f, int d) {
    check_fact_range(e, f, d);
    return fact_matrix(e, f, d, e + f - 2 * d - 2, d + 1);
}

bool verify_fact1(int e, int f, int d) {
    return det(fact1_matrix(e, f, d)) != 0;
}

Mat fact2_matrix(int e, int f, int d) {
    check_fact_range(e, f, d);
    return fact_matrix(e, f, d, e + f - 2 * d - 1, d);
}

HighestGenerator highest_generator(int e, int f, int d) {
    Mat m = fact2_matrix(e, f, d);
    Mat ker = kernel_basis(m);
    if (ker.cols() != 1)
        throw FalsificationError("fact (2) kernel is not one-dimensional for e=" +
                                 std::to_string(e) + " f=" + std::to_string(f) +
                                 " d=" + std::to_string(d));
    Vec coeffs = ker.col(0);  // (a_d, ..., a_0), first nonzero already 1
    Vec vec(size_t(e) * f);
    for (int k = 0; k <= d; ++k) {
        // coeffs[k] multiplies x^{d-k} y^k
        vec[size_t(d - k) * f + k] = coeffs[k];
    }
    return {std::move(coeffs), std::move(vec)};
}

namespace {

// Per-coordinate generator coefficients indexed by the x-exponent,
// swapping the factor roles when e > f.
Vec generator_x_coeffs(int e, int f, int kappa) {
    if (e <= f) {
        Vec coeffs = highest_generator(e, f, kappa).coeffs;  // (a_kappa..a_0)
        Vec byx(kappa + 1);
        for (int m = 0; m <= kappa; ++m) byx[m] = coeffs[kappa - m];
        return byx;
    }
    Vec coeffs = highest_generator(f, e, kappa).coeffs;  // roles of x and y swapped
    Vec byx(kappa + 1);
    for (int m = 0; m <= kappa; ++m) byx[m] = coeffs[m];
    return byx;
}

// Inverse of a matrix known to be block-diagonal under the given row/column
// grading. Verifies the support claim and each slice, then checks the
// product against the identity, so a wrong grading can never produce a
// false certificate. Returns nullopt when any slice is singular.
std::optional<Mat> graded_inverse(const Mat& a, const std::vector<int>& row_deg,
                                  const std::vector<int>& col_deg) {
    const int n = a.rows();
    std::map<int, std::vector<int>> rows_by, cols_by;
    for (int i = 0; i < n; ++i) rows_by[row_deg[i]].push_back(i);
    for (int j = 0; j < n; ++j) cols_by[col_deg[j]].push_back(j);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (a(i, j) != 0 && row_deg[i] != col_deg[j]) return std::nullopt;
    Mat inv(n, n);
    for (const auto& [deg, cols] : cols_by) {
        const auto it = rows_by.find(deg);
        if (it == rows_by.end() || it->second.size() != cols.size()) return std::nullopt;
        const auto& rows = it->second;
        const int s = int(cols.size());
        Mat slice(s, s);
        for (int p = 0; p < s; ++p)
            for (int q = 0; q < s; ++q) slice(p, q) = a(rows[p], cols[q]);
        auto slice_inv = inverse(slice);
        if (!slice_inv) return std::nullopt;
        for (int p = 0; p < s; ++p)
            for (int q = 0; q < s; ++q) inv(cols[p], rows[q]) = (*slice_inv)(p, q);
    }
    if (a * inv != Mat::identity(n)) return std::nullopt;
    return inv;
}

}  // namespace

Decomposition cg_decomposition(const ASShape& e, const ASShape& f) {
    if (e.g() != f.g()) throw ValidationError("shape mismatch in cg_decomposition");
    const int g = e.g();
    ModulePtr product = pontryagin_product_ptr(as_module_ptr(e), as_module_ptr(f));
    const int dim = product->dim();

    auto shapes = cg_block_shapes(e, f);
    MultiIndexBox ebox(e.exponents), fbox(f.exponents);

    // t_i^{(kappa)} coefficient tables per coordinate
    std::vector<std::vector<Vec>> coeff(g);
    for (int i = 0; i < g; ++i) {
        int eps = std::min(e.exponents[i], f.exponents[i]);
        for (int kappa = 0; kappa < eps; ++kappa)
            coeff[i].push_back(generator_x_coeffs(e.exponents[i], f.exponents[i], kappa));
    }

    // multidegree bookkeeping for the graded certificate
    MultiIndexBox degbox([&] {
        std::vector<int> lims(g);
        for (int i = 0; i < g; ++i) lims[i] = e.exponents[i] + f.exponents[i] - 1;
        return lims;
    }());
    std::vector<int> row_deg(dim);
    for (int k = 0; k < dim; ++k) {
        std::vector<int> a = ebox.at(k / fbox.size());
        std::vector<int> b = fbox.at(k % fbox.size());
        for (int i = 0; i < g; ++i) a[i] += b[i];
        row_deg[k] = degbox.index(a);
    }

    std::vector<DecompositionBlock> blocks;
    Mat assembled(dim, dim);
    std::vector<int> col_deg(dim);
    int col = 0;
    for (const auto& [index, shape] : shapes) {
        // generator: product of the per-coordinate t_i^{(I_i)}
        Vec gen(dim);
        for (int ka = 0; ka < ebox.size(); ++ka) {
            std::vector<int> a = ebox.at(ka);
            Rat c = 1;
            bool ok = true;
            std::vector<int> b(g);
            for (int i = 0; i < g && ok; ++i) {
                b[i] = index[i] - a[i];
                if (b[i] < 0 || b[i] >= f.exponents[i] || a[i] > index[i]) ok = false;
                else c *= coeff[i][index[i]][a[i]];
            }
            if (ok && c != 0) gen[size_t(ka) * fbox.size() + fbox.index(b)] = c;
        }

        MultiIndexBox bbox(shape.exponents);
        Mat emb(dim, bbox.size());
        emb.set_col(0, gen);
        for (int k = 1; k < bbox.size(); ++k) {
            std::vector<int> alpha = bbox.at(k);
            int i = 0;
            while (alpha[i] == 0) ++i;
            alpha[i] -= 1;
            emb.set_col(k, product->action(i).apply(emb.col(bbox.index(alpha))));
        }

        for (int k = 0; k < bbox.size(); ++k) {
            std::vector<int> alpha = bbox.at(k);
            for (int i = 0; i < g; ++i) alpha[i] += index[i];
            col_deg[col + k] = degbox.index(alpha);
            assembled.set_col(col + k, emb.col(k));
        }
        col += bbox.size();

        ModulePtr block_module = as_module_ptr(shape);
        try {
            blocks.push_back(DecompositionBlock{index, shape, std::move(gen),
                                                ModuleMap(block_module, product, std::move(emb))});
        } catch (const ValidationError& err) {
            throw FalsificationError(std::string("block embedding certificate failed: ") +
                                     err.what());
        }
    }
    if (col != dim)
        throw FalsificationError("block dimensions do not fill the product");

    auto inv = graded_inverse(assembled, row_deg, col_deg);
    if (!inv)
        throw FalsificationError("direct-sum certificate failed: assembled basis is singular");
    return Decomposition{e, f, product, std::move(blocks), std::move(assembled),
                         std::move(*inv)};
}

MaximalComponent maximal_component(const Decomposition& d) {
    const DecompositionBlock& vmax = d.blocks.front();
    const int s = int(vmax.shape.total_dim());
    Mat proj(s, d.product->dim());
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < d.product->dim(); ++j) proj(i, j) = d.assembled_inverse(i, j);
    ModuleMap projection(d.product, vmax.embedding.source(), std::move(proj));
    if (projection.matrix() * vmax.embedding.matrix() != Mat::identity(s))
        throw FalsificationError("maximal component projection is not a retraction");
    return MaximalComponent{vmax.shape, std::move(projection), vmax.embedding};
}

MaximalComponent maximal_component(const ASShape& e, const ASShape& f) {
    return maximal_component(cg_decomposition(e, f));
}

}  // namespace artmod
