#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "artmod/matrix.hpp"

namespace artmod {

/// Finite-length module over the local ring k[[x_1..x_g]], represented as a
/// finite-dimensional Q-vector space together with the g commuting nilpotent
/// operators giving the action of the variables. Immutable after creation.
class ArtinianModule {
  public:
    /// Validates commutation (X_i X_j = X_j X_i) and nilpotency (X_i^dim = 0);
    /// throws ValidationError otherwise.
    ArtinianModule(int g, std::vector<Mat> actions);

    /// dim-dimensional module with all actions zero (k^dim as a B-module).
    static ArtinianModule zero_action(int g, int dim);

    int g() const { return g_; }
    int dim() const { return dim_; }
    const Mat& action(int i) const { return actions_[i]; }
    const std::vector<Mat>& actions() const { return actions_; }

    /// Action of a direction c in k^g: sum_i c_i X_i.
    Mat direction_action(const Vec& c) const;

    bool operator==(const ArtinianModule& o) const;
    bool operator!=(const ArtinianModule& o) const { return !(*this == o); }

  private:
    int g_;
    int dim_;
    std::vector<Mat> actions_;
};

using ModulePtr = std::shared_ptr<const ArtinianModule>;

ModulePtr share(ArtinianModule m);

/// Linear map between modules intertwining the two actions:
/// matrix * X_i^source = X_i^target * matrix for every i.
class ModuleMap {
  public:
    ModuleMap(ModulePtr source, ModulePtr target, Mat matrix);

    static ModuleMap identity(const ModulePtr& m);

    const ModulePtr& source() const { return source_; }
    const ModulePtr& target() const { return target_; }
    const Mat& matrix() const { return matrix_; }

    int rank() const;
    bool is_injective() const { return rank() == source_->dim(); }
    bool is_surjective() const { return rank() == target_->dim(); }
    bool is_bijective() const;

    /// Composition (this after other).
    ModuleMap compose(const ModuleMap& other) const;

  private:
    ModulePtr source_;
    ModulePtr target_;
    Mat matrix_;
};

/// Subspace of a module closed under every action operator, given by an
/// independent column basis.
struct Submodule {
    ModulePtr ambient;
    Mat basis;  // ambient->dim() x dim(submodule)

    Submodule(ModulePtr ambient_, Mat basis_);  // validates independence+closure
    int dim() const { return basis.cols(); }
};

/// Realize a submodule as a module in its own right (restricted actions)
/// together with the inclusion map.
struct SubmodulePresentation {
    ModulePtr module;
    ModuleMap inclusion;
};
SubmodulePresentation submodule_as_module(const Submodule& s);

/// Quotient by a submodule: induced actions on a complement coordinate
/// system plus the canonical projection.
struct QuotientPresentation {
    ModulePtr module;
    ModuleMap projection;
};
QuotientPresentation quotient_by(const Submodule& s);

// --- socle / radical ---------------------------------------------------

/// Soc(M) = intersection of ker X_i, the annihilator of the maximal ideal.
Submodule socle(const ModulePtr& m);

/// mM = sum of images of the X_i.
Submodule radical_submodule(const ModulePtr& m);

// --- decomposability ---------------------------------------------------

/// True iff Soc(M) is one-dimensional, i.e. M has no decomposable
/// submodules. Throws on the zero module.
bool has_no_decomposable_submodules(const ModulePtr& m);

/// If Soc(M) has dimension >= 2, an injective equivariant map from the
/// 2-dimensional zero-action module (a copy of k+k inside M); else nullopt.
std::optional<ModuleMap> decomposable_submodule_witness(const ModulePtr& m);

/// If dim(M/mM) = 1, a generator of M as a B-module (and the zero-length
/// vector for the zero module); if dim(M/mM) >= 2, nullopt.
std::optional<Vec> cyclic_generator(const ModulePtr& m);

/// If dim(M/mM) >= 2, the projection onto M/mM as a zero-action module;
/// else nullopt. Complements cyclic_generator exactly.
std::optional<ModuleMap> decomposable_quotient_witness(const ModulePtr& m);

// --- Matlis duality ----------------------------------------------------

/// Vector-space dual with transposed actions. An involution on the nose:
/// matlis_dual(matlis_dual(m)) has the same action matrices as m.
ArtinianModule matlis_dual(const ArtinianModule& m);
ModulePtr matlis_dual(const ModulePtr& m);

/// Transposed map between the duals; swaps injective and surjective.
ModuleMap dual_map(const ModuleMap& f);

// --- kernels, images, cokernels ----------------------------------------

struct InducedModule {
    ModulePtr module;
    ModuleMap connecting;  // inclusion (kernel, image) or projection (cokernel)
};

InducedModule kernel_module(const ModuleMap& f);
InducedModule image_module(const ModuleMap& f);
InducedModule cokernel_module(const ModuleMap& f);

/// Corestriction of f onto its image (always surjective).
ModuleMap corestrict_to_image(const ModuleMap& f);

// --- annihilator orders and Jordan data --------------------------------

/// e(x) for x = sum c_i x_i: smallest k with (sum c_i X_i)^k a = 0.
/// Rejects zero direction and zero vector.
int annihilator_exponent(const ArtinianModule& m, const Vec& direction, const Vec& a);

/// Multiset of Jordan block sizes of a nilpotent matrix, from the rank
/// sequence of its powers: #{blocks of size >= k} = rank(t^{k-1}) - rank(t^k).
/// Returned sorted descending. Rejects non-nilpotent input.
std::vector<int> jordan_type_oracle(const Mat& t);

/// Smallest action-closed subspace containing the given vectors.
Submodule submodule_generated(const ModulePtr& m, const std::vector<Vec>& vectors);

}  // namespace artmod
