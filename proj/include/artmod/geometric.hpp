#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artmod/as_module.hpp"
#include "artmod/pontryagin.hpp"

namespace artmod {

/// A multiplication map phi: M * M' -> M_2 proposed as "geometric": the
/// target must have a one-dimensional socle, and the checkers probe the
/// Hopf-type bound dim phi(L*L') >= dim L + dim L' - 1 over submodule pairs.
struct GeometricCandidate {
    ModulePtr left, right, target;
    ModuleMap map;  // source: pontryagin_product(left, right)
    std::optional<ASShape> left_shape, right_shape;

    GeometricCandidate(ModulePtr left, ModulePtr right, ModulePtr target, Mat matrix,
                       std::optional<ASShape> left_shape = std::nullopt,
                       std::optional<ASShape> right_shape = std::nullopt);
};

enum class GeometricStatus { VerifiedExhaustive, PassedSampled, Violated };

std::string to_string(GeometricStatus s);

struct GeometricWitness {
    Mat left_basis, right_basis;  // bases of the violating L, L'
    int achieved = 0;
    int required = 0;
};

struct GeometricVerdict {
    GeometricStatus status;
    std::optional<GeometricWitness> witness;  // present iff Violated
    int probes_used = 0;
    std::optional<std::uint64_t> seed;
};

/// Complete finite verification for g = 1 with cyclic factors: the
/// submodules of a cyclic module are exactly the images of the powers of
/// the action, so all (dim+1)(dim'+1) pairs are enumerated. Pairs with a
/// zero side are vacuous (the bound only constrains nonzero submodules).
/// Throws ValidationError when the lattice is not finite (g >= 2 or a
/// non-cyclic factor); use the sampled checker there.
GeometricVerdict check_geometric_exhaustive_g1(const GeometricCandidate& c);

/// Necessary-evidence checker over a deterministic family: full modules,
/// socles, the monomial submodules when a factor's AS shape is known (and
/// the budget is nonzero), and `budget` seeded probe-generated cyclic
/// submodules per side. Never returns VerifiedExhaustive.
GeometricVerdict check_geometric_sampled(const GeometricCandidate& c, int probe_budget,
                                         std::uint64_t seed);

/// Instance check of the injectivity-on-V_max statement: for AS factors,
/// a geometric map restricted to the maximal component is injective and
/// the image of the whole product equals the image of V_max.
struct PasReport {
    bool injective_on_vmax = false;
    bool image_equality = false;
    int rank_map = 0;
    int rank_restricted = 0;
    int dim_vmax = 0;
};

PasReport verify_pas(const GeometricCandidate& c);

/// Extension of a surjective geometric map's target into the maximal
/// component of the product of the AS-extensions of the factors: verifies
/// that (t_i)^{e_i+f_i-1} kills the target (FalsificationError otherwise),
/// dualizes the target to a cyclic module, and returns the dual of the
/// resulting surjection B/J -> dual(target) — an injective equivariant
/// embedding target -> as_module(e_i+f_i-1).
ModuleMap extend_to_max_component(const GeometricCandidate& c, const ASExtension& ext_left,
                                  const ASExtension& ext_right);

/// The candidate family shipped for tests: the V_max projection, its
/// precomposition with a unipotent product automorphism, and its
/// postcomposition with an injective shift embedding.
std::vector<GeometricCandidate> canonical_candidate_family(const ASShape& e, const ASShape& f);

/// The V_max projection alone, as a candidate.
GeometricCandidate vmax_projection_candidate(const ASShape& e, const ASShape& f);

}  // namespace artmod
