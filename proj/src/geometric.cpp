#include "artmod/geometric.hpp"

#include <set>
#include <sstream>

#include "artmod/errors.hpp"
#include "artmod/rng.hpp"

namespace artmod {

GeometricCandidate::GeometricCandidate(ModulePtr left_, ModulePtr right_, ModulePtr target_,
                                       Mat matrix, std::optional<ASShape> lshape,
                                       std::optional<ASShape> rshape)
    : left(std::move(left_)),
      right(std::move(right_)),
      target(std::move(target_)),
      map(pontryagin_product_ptr(left, right), target, std::move(matrix)),
      left_shape(std::move(lshape)),
      right_shape(std::move(rshape)) {
    if (target->dim() == 0 || socle(target).dim() != 1)
        throw ValidationError("geometric candidate target must have a one-dimensional socle");
}

std::string to_string(GeometricStatus s) {
    switch (s) {
        case GeometricStatus::VerifiedExhaustive: return "verified-exhaustive";
        case GeometricStatus::PassedSampled: return "passed-sampled";
        case GeometricStatus::Violated: return "violated";
    }
    return "?";
}

namespace {

// dim of the image of L*L' under the map, from bases of L and L'.
int image_dim(const ModuleMap& map, const Mat& bl, const Mat& br) {
    return rank(map.matrix() * bl.kron(br));
}

// The bound constrains nonzero submodule pairs; a zero side makes it vacuous.
int required_dim(int dl, int dr) {
    return (dl > 0 && dr > 0) ? dl + dr - 1 : 0;
}

std::optional<GeometricWitness> check_pair(const ModuleMap& map, const Mat& bl, const Mat& br) {
    int req = required_dim(bl.cols(), br.cols());
    int got = req > 0 ? image_dim(map, bl, br) : 0;
    if (got < req) return GeometricWitness{bl, br, got, req};
    return std::nullopt;
}

}  // namespace

GeometricVerdict check_geometric_exhaustive_g1(const GeometricCandidate& c) {
    if (c.left->g() != 1)
        throw ValidationError("exhaustive check is only complete for g = 1");
    if (!cyclic_generator(c.left) || !cyclic_generator(c.right))
        throw ValidationError("exhaustive check needs cyclic factors (finite submodule lattice)");
    auto chain = [](const ModulePtr& m) {
        // submodules of a cyclic g=1 module: im(X^j), j = 0..dim
        std::vector<Mat> bases{Mat::identity(m->dim())};
        Mat p = Mat::identity(m->dim());
        for (int j = 1; j <= m->dim(); ++j) {
            p = p * m->action(0);
            bases.push_back(column_space_basis(p));
        }
        return bases;
    };
    for (const Mat& bl : chain(c.left))
        for (const Mat& br : chain(c.right))
            if (auto w = check_pair(c.map, bl, br))
                return GeometricVerdict{GeometricStatus::Violated, std::move(w), 0, std::nullopt};
    return GeometricVerdict{GeometricStatus::VerifiedExhaustive, std::nullopt, 0, std::nullopt};
}

namespace {

std::string colspace_signature(const Mat& basis) {
    Mat canon = rref(basis.transpose()).first;
    std::ostringstream os;
    os << basis.cols() << ';';
    for (int i = 0; i < canon.rows(); ++i)
        for (int j = 0; j < canon.cols(); ++j) os << rat_to_string(canon(i, j)) << ',';
    return os.str();
}

struct SampleFamily {
    std::vector<Mat> bases;
    std::set<std::string> seen;

    void add(Mat basis) {
        if (seen.insert(colspace_signature(basis)).second) bases.push_back(std::move(basis));
    }
};

SampleFamily side_family(const ModulePtr& m, const std::optional<ASShape>& shape,
                         int probe_budget, SplitMix64& rng, int& probes_used) {
    SampleFamily fam;
    fam.add(socle(m).basis);
    fam.add(Mat::identity(m->dim()));
    if (shape && probe_budget > 0) {
        MultiIndexBox box(shape->exponents);
        for (int k = 0; k < box.size(); ++k) {
            std::vector<int> a = box.at(k);
            std::vector<int> cols;
            for (int l = 0; l < box.size(); ++l) {
                std::vector<int> b = box.at(l);
                bool geq = true;
                for (size_t i = 0; i < a.size(); ++i)
                    if (b[i] < a[i]) geq = false;
                if (geq) cols.push_back(l);
            }
            fam.add(Mat::identity(m->dim()).cols_subset(cols));
        }
    }
    for (int p = 0; p < probe_budget; ++p) {
        Vec v(m->dim());
        for (int i = 0; i < m->dim(); ++i) v[i] = Rat(long(rng.in_range(-2, 2)));
        ++probes_used;
        if (is_zero_vec(v)) continue;
        fam.add(submodule_generated(m, {v}).basis);
    }
    return fam;
}

}  // namespace

GeometricVerdict check_geometric_sampled(const GeometricCandidate& c, int probe_budget,
                                         std::uint64_t seed) {
    SplitMix64 rng(seed);
    int probes_used = 0;
    SampleFamily lf = side_family(c.left, c.left_shape, probe_budget, rng, probes_used);
    SampleFamily rf = side_family(c.right, c.right_shape, probe_budget, rng, probes_used);
    for (const Mat& bl : lf.bases)
        for (const Mat& br : rf.bases)
            if (auto w = check_pair(c.map, bl, br))
                return GeometricVerdict{GeometricStatus::Violated, std::move(w), probes_used,
                                        seed};
    return GeometricVerdict{GeometricStatus::PassedSampled, std::nullopt, probes_used, seed};
}

PasReport verify_pas(const GeometricCandidate& c) {
    if (!c.left_shape || !c.right_shape)
        throw ValidationError("verify_pas needs AS factors with known shapes");
    MaximalComponent mc = maximal_component(*c.left_shape, *c.right_shape);
    ModuleMap restricted = c.map.compose(mc.section);
    PasReport r;
    r.dim_vmax = mc.section.source()->dim();
    r.rank_restricted = restricted.rank();
    r.rank_map = c.map.rank();
    r.injective_on_vmax = r.rank_restricted == r.dim_vmax;
    r.image_equality = r.rank_map == r.rank_restricted;
    return r;
}

ModuleMap extend_to_max_component(const GeometricCandidate& c, const ASExtension& ext_left,
                                  const ASExtension& ext_right) {
    if (!c.map.is_surjective())
        throw ValidationError("extension requires a surjective multiplication map");
    if (*ext_left.original != *c.left || *ext_right.original != *c.right)
        throw ValidationError("extensions do not match the candidate factors");
    const int g = c.target->g();
    if (ext_left.shape.g() != g || ext_right.shape.g() != g)
        throw ValidationError("extension shapes do not match the ring");
    std::vector<int> s(g);
    for (int i = 0; i < g; ++i)
        s[i] = ext_left.shape.exponents[i] + ext_right.shape.exponents[i] - 1;

    // J = (t_i^{e_i+f_i-1}) must annihilate the target
    for (int i = 0; i < g; ++i) {
        Mat p = Mat::identity(c.target->dim());
        for (int k = 0; k < s[i] && !p.is_zero(); ++k) p = p * c.target->action(i);
        if (!p.is_zero())
            throw FalsificationError(
                "J = (t_i^{e_i+f_i-1}) fails to annihilate the target module");
    }

    ModulePtr dual = matlis_dual(c.target);
    auto a = cyclic_generator(dual);
    if (!a)
        throw ValidationError("dual of the target is not cyclic "
                              "(target has decomposable submodules)");

    ASShape shape(s);
    MultiIndexBox box(shape.exponents);
    Mat p(dual->dim(), box.size());
    p.set_col(0, *a);
    for (int k = 1; k < box.size(); ++k) {
        std::vector<int> alpha = box.at(k);
        int i = 0;
        while (alpha[i] == 0) ++i;
        alpha[i] -= 1;
        p.set_col(k, dual->action(i).apply(p.col(box.index(alpha))));
    }
    ModuleMap sigma = as_self_duality(shape);
    ModuleMap embedding(c.target, sigma.source(),
                        sigma.matrix().transpose() * p.transpose());
    if (!embedding.is_injective())
        throw FalsificationError("maximal-component embedding failed the rank certificate");
    return embedding;
}

GeometricCandidate vmax_projection_candidate(const ASShape& e, const ASShape& f) {
    MaximalComponent mc = maximal_component(e, f);
    return GeometricCandidate(as_module_ptr(e), as_module_ptr(f), mc.projection.target(),
                              mc.projection.matrix(), e, f);
}

std::vector<GeometricCandidate> canonical_candidate_family(const ASShape& e, const ASShape& f) {
    MaximalComponent mc = maximal_component(e, f);
    ModulePtr left = as_module_ptr(e), right = as_module_ptr(f);
    std::vector<GeometricCandidate> fam;
    fam.emplace_back(left, right, mc.projection.target(), mc.projection.matrix(), e, f);

    // precomposition with the unipotent automorphism 1 + t_1
    const ModulePtr& product = mc.projection.source();
    Mat aut = Mat::identity(product->dim()) + product->action(0);
    fam.emplace_back(left, right, mc.projection.target(), mc.projection.matrix() * aut, e, f);

    // postcomposition with the injective shift x^a -> x^{a+delta_1}
    ASShape wider = mc.shape;
    wider.exponents[0] += 1;
    MultiIndexBox from(mc.shape.exponents), to(wider.exponents);
    Mat shift(int(wider.total_dim()), int(mc.shape.total_dim()));
    for (int k = 0; k < from.size(); ++k) {
        std::vector<int> a = from.at(k);
        a[0] += 1;
        shift(to.index(a), k) = 1;
    }
    fam.emplace_back(left, right, as_module_ptr(wider), shift * mc.projection.matrix(), e, f);
    return fam;
}

}  // namespace artmod
