#include "artmod/module.hpp"

#include <algorithm>

#include "artmod/errors.hpp"

namespace artmod {

namespace {

// X^k v for increasing k until zero; returns false if v survives max_steps
// applications (i.e. the operator is not nilpotent on v).
bool dies_under_iteration(const Mat& x, Vec v, int max_steps) {
    for (int k = 0; k < max_steps; ++k) {
        if (is_zero_vec(v)) return true;
        v = x.apply(v);
    }
    return is_zero_vec(v);
}

bool is_nilpotent(const Mat& x) {
    const int n = x.rows();
    for (int j = 0; j < n; ++j) {
        Vec e(n);
        e[j] = 1;
        if (!dies_under_iteration(x, std::move(e), n)) return false;
    }
    return true;
}

}  // namespace

ArtinianModule::ArtinianModule(int g, std::vector<Mat> actions)
    : g_(g), actions_(std::move(actions)) {
    if (g < 0) throw ValidationError("negative variable count");
    if (int(actions_.size()) != g)
        throw ValidationError("expected one action matrix per variable");
    dim_ = g ? actions_[0].rows() : 0;
    for (const Mat& a : actions_) {
        if (a.rows() != a.cols()) throw ValidationError("action matrix not square");
        if (a.rows() != dim_) throw ValidationError("action matrices of unequal size");
    }
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            if (actions_[i] * actions_[j] != actions_[j] * actions_[i])
                throw ValidationError("action matrices do not commute");
    for (int i = 0; i < g; ++i)
        if (!is_nilpotent(actions_[i]))
            throw ValidationError("action matrix is not nilpotent");
}

ArtinianModule ArtinianModule::zero_action(int g, int dim) {
    if (g == 0 && dim != 0)
        throw ValidationError("dimension of a module over 0 variables cannot be inferred");
    std::vector<Mat> acts(g, Mat::zero(dim, dim));
    return ArtinianModule(g, std::move(acts));
}

Mat ArtinianModule::direction_action(const Vec& c) const {
    if (int(c.size()) != g_) throw ValidationError("direction length != g");
    Mat d = Mat::zero(dim_, dim_);
    for (int i = 0; i < g_; ++i) {
        if (c[i] == 0) continue;
        d = d + actions_[i].scaled(c[i]);
    }
    return d;
}

bool ArtinianModule::operator==(const ArtinianModule& o) const {
    return g_ == o.g_ && dim_ == o.dim_ && actions_ == o.actions_;
}

ModulePtr share(ArtinianModule m) {
    return std::make_shared<const ArtinianModule>(std::move(m));
}

ModuleMap::ModuleMap(ModulePtr source, ModulePtr target, Mat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (source_->g() != target_->g())
        throw ValidationError("map between modules over different rings");
    if (matrix_.rows() != target_->dim() || matrix_.cols() != source_->dim())
        throw ValidationError("map matrix has wrong shape");
    for (int i = 0; i < source_->g(); ++i)
        if (matrix_ * source_->action(i) != target_->action(i) * matrix_)
            throw ValidationError("map is not equivariant");
}

ModuleMap ModuleMap::identity(const ModulePtr& m) {
    return ModuleMap(m, m, Mat::identity(m->dim()));
}

int ModuleMap::rank() const {
    return artmod::rank(matrix_);
}

bool ModuleMap::is_bijective() const {
    return source_->dim() == target_->dim() && rank() == source_->dim();
}

ModuleMap ModuleMap::compose(const ModuleMap& other) const {
    if (other.target_->dim() != source_->dim() || *other.target_ != *source_)
        throw ValidationError("composition of non-matching maps");
    return ModuleMap(other.source_, target_, matrix_ * other.matrix_);
}

Submodule::Submodule(ModulePtr ambient_, Mat basis_)
    : ambient(std::move(ambient_)), basis(std::move(basis_)) {
    if (basis.rows() != ambient->dim())
        throw ValidationError("submodule basis lives in the wrong space");
    if (rank(basis) != basis.cols())
        throw ValidationError("submodule basis columns are dependent");
    for (int i = 0; i < ambient->g(); ++i) {
        Mat shifted = ambient->action(i) * basis;
        if (rank(Mat::hcat(basis, shifted)) != basis.cols())
            throw ValidationError("submodule basis is not action-closed");
    }
}

SubmodulePresentation submodule_as_module(const Submodule& s) {
    std::vector<Mat> induced;
    induced.reserve(s.ambient->g());
    for (int i = 0; i < s.ambient->g(); ++i) {
        auto a = solve_matrix(s.basis, s.ambient->action(i) * s.basis);
        if (!a) throw ValidationError("submodule basis is not action-closed");
        induced.push_back(std::move(*a));
    }
    ModulePtr mod = share(ArtinianModule(s.ambient->g(), std::move(induced)));
    return {mod, ModuleMap(mod, s.ambient, s.basis)};
}

QuotientPresentation quotient_by(const Submodule& s) {
    const int n = s.ambient->dim();
    const int r = s.basis.cols();
    const int q = n - r;
    // complete the basis with the lexicographically first standard vectors
    auto pivots = rref(Mat::hcat(s.basis, Mat::identity(n))).second;
    std::vector<int> complement;
    for (int c : pivots)
        if (c >= r) complement.push_back(c - r);
    Mat ext(n, q);
    for (int k = 0; k < q; ++k) ext(complement[k], k) = 1;
    Mat full = Mat::hcat(s.basis, ext);
    auto inv = inverse(full);
    if (!inv) throw ValidationError("internal: completed basis is singular");
    Mat proj(q, n);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < n; ++j) proj(i, j) = (*inv)(r + i, j);
    std::vector<Mat> induced;
    induced.reserve(s.ambient->g());
    for (int i = 0; i < s.ambient->g(); ++i)
        induced.push_back(proj * (s.ambient->action(i) * ext));
    ModulePtr mod = share(ArtinianModule(s.ambient->g(), std::move(induced)));
    return {mod, ModuleMap(s.ambient, mod, std::move(proj))};
}

Submodule socle(const ModulePtr& m) {
    Mat stacked(0, m->dim());
    for (int i = 0; i < m->g(); ++i) stacked = Mat::vcat(stacked, m->action(i));
    return Submodule(m, kernel_basis(stacked));
}

Submodule radical_submodule(const ModulePtr& m) {
    Mat joined(m->dim(), 0);
    for (int i = 0; i < m->g(); ++i) joined = Mat::hcat(joined, m->action(i));
    return Submodule(m, column_space_basis(joined));
}

bool has_no_decomposable_submodules(const ModulePtr& m) {
    if (m->dim() == 0)
        throw ValidationError("decomposability test is undefined on the zero module");
    return socle(m).dim() == 1;
}

std::optional<ModuleMap> decomposable_submodule_witness(const ModulePtr& m) {
    Submodule soc = socle(m);
    if (soc.dim() < 2) return std::nullopt;
    Mat two = soc.basis.cols_subset({0, 1});
    ModulePtr kk = share(ArtinianModule::zero_action(m->g(), 2));
    return ModuleMap(kk, m, std::move(two));
}

namespace {

// Lexicographically first standard basis vectors completing span(basis).
std::vector<int> complement_indices(const Mat& basis) {
    const int n = basis.rows();
    auto pivots = rref(Mat::hcat(basis, Mat::identity(n))).second;
    std::vector<int> out;
    for (int c : pivots)
        if (c >= basis.cols()) out.push_back(c - basis.cols());
    return out;
}

}  // namespace

std::optional<Vec> cyclic_generator(const ModulePtr& m) {
    if (m->dim() == 0) return Vec{};  // the zero module is B*0
    Submodule rad = radical_submodule(m);
    const int q = m->dim() - rad.dim();
    if (q >= 2) return std::nullopt;
    // q = 0 cannot happen for nilpotent actions (Nakayama)
    int j = complement_indices(rad.basis).at(0);
    Vec a(m->dim());
    a[j] = 1;
    return a;
}

std::optional<ModuleMap> decomposable_quotient_witness(const ModulePtr& m) {
    if (m->dim() == 0) return std::nullopt;
    Submodule rad = radical_submodule(m);
    if (m->dim() - rad.dim() < 2) return std::nullopt;
    return quotient_by(rad).projection;
}

ArtinianModule matlis_dual(const ArtinianModule& m) {
    std::vector<Mat> acts;
    acts.reserve(m.g());
    for (int i = 0; i < m.g(); ++i) acts.push_back(m.action(i).transpose());
    ArtinianModule d(m.g(), std::move(acts));
    return d;
}

ModulePtr matlis_dual(const ModulePtr& m) {
    return share(matlis_dual(*m));
}

ModuleMap dual_map(const ModuleMap& f) {
    return ModuleMap(matlis_dual(f.target()), matlis_dual(f.source()),
                     f.matrix().transpose());
}

InducedModule kernel_module(const ModuleMap& f) {
    Submodule k(f.source(), kernel_basis(f.matrix()));
    auto pres = submodule_as_module(k);
    return {pres.module, pres.inclusion};
}

InducedModule image_module(const ModuleMap& f) {
    Submodule im(f.target(), column_space_basis(f.matrix()));
    auto pres = submodule_as_module(im);
    return {pres.module, pres.inclusion};
}

InducedModule cokernel_module(const ModuleMap& f) {
    Submodule im(f.target(), column_space_basis(f.matrix()));
    auto pres = quotient_by(im);
    return {pres.module, pres.projection};
}

ModuleMap corestrict_to_image(const ModuleMap& f) {
    auto im = image_module(f);
    auto coords = solve_matrix(im.connecting.matrix(), f.matrix());
    if (!coords) throw ValidationError("internal: image basis does not span image");
    return ModuleMap(f.source(), im.module, std::move(*coords));
}

int annihilator_exponent(const ArtinianModule& m, const Vec& direction, const Vec& a) {
    if (is_zero_vec(direction)) throw ValidationError("zero direction");
    if (int(a.size()) != m.dim() || is_zero_vec(a))
        throw ValidationError("annihilator exponent needs a nonzero vector in the module");
    Mat d = m.direction_action(direction);
    Vec v = a;
    int k = 0;
    while (!is_zero_vec(v)) {
        v = d.apply(v);
        ++k;
        if (k > m.dim())
            throw ValidationError("internal: direction action is not nilpotent");
    }
    return k;
}

std::vector<int> jordan_type_oracle(const Mat& t) {
    if (t.rows() != t.cols()) throw ValidationError("jordan type of non-square matrix");
    if (!is_nilpotent(t)) throw ValidationError("jordan type oracle needs a nilpotent matrix");
    const int n = t.rows();
    std::vector<int> ranks{n};  // rank(t^0), rank(t^1), ...
    Mat p = t;
    while (true) {
        int r = rank(p);
        ranks.push_back(r);
        if (r == 0) break;
        p = p * t;
    }
    ranks.push_back(0);
    std::vector<int> sizes;
    for (int k = 1; k + 1 < int(ranks.size()); ++k) {
        int exact = (ranks[k - 1] - ranks[k]) - (ranks[k] - ranks[k + 1]);
        for (int c = 0; c < exact; ++c) sizes.push_back(k);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

Submodule submodule_generated(const ModulePtr& m, const std::vector<Vec>& vectors) {
    Mat gen(m->dim(), int(vectors.size()));
    for (int j = 0; j < int(vectors.size()); ++j) {
        if (int(vectors[j].size()) != m->dim())
            throw ValidationError("generator vector has wrong length");
        gen.set_col(j, vectors[j]);
    }
    Mat basis = column_space_basis(gen);
    while (true) {
        Mat ext = basis;
        for (int i = 0; i < m->g(); ++i) ext = Mat::hcat(ext, m->action(i) * basis);
        Mat next = column_space_basis(ext);
        if (next.cols() == basis.cols()) break;
        basis = std::move(next);
    }
    return Submodule(m, std::move(basis));
}

}  // namespace artmod
