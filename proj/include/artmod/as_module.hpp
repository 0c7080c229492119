#pragma once

#include <vector>

#include "artmod/module.hpp"

namespace artmod {

/// Exponent vector (e_1,...,e_g) naming the module B/(x_1^{e_1},...,x_g^{e_g}).
struct ASShape {
    std::vector<int> exponents;

    ASShape() = default;
    explicit ASShape(std::vector<int> e);
    int g() const { return int(exponents.size()); }
    long total_dim() const;  // product of the exponents
    bool operator==(const ASShape& o) const { return exponents == o.exponents; }
};

/// Row-major enumeration of the lattice box prod [0, limits_i), last
/// coordinate fastest. Shared by the AS constructors and the Pontryagin
/// block bookkeeping.
struct MultiIndexBox {
    std::vector<int> limits;

    explicit MultiIndexBox(std::vector<int> lims);
    int size() const { return size_; }
    int index(const std::vector<int>& a) const;
    std::vector<int> at(int k) const;

  private:
    int size_ = 1;
    std::vector<int> strides_;
};

/// The AS-module on the monomial basis {x^a : 0 <= a_i < e_i}; X_i acts as
/// multiplication by x_i, truncating at exponent e_i.
ArtinianModule as_module(const ASShape& shape);
ModulePtr as_module_ptr(const ASShape& shape);

/// Koszul self-duality: the equivariant isomorphism M -> matlis_dual(M)
/// induced by the perfect pairing <x^a, x^b> = [a + b = (e_1-1,...,e_g-1)].
/// The matrix is the index-reversal permutation.
ModuleMap as_self_duality(const ASShape& shape);

/// Certified embedding of a module with one-dimensional socle into an
/// AS-module, built by dualizing the surjection B/J -> matlis_dual(M).
///
/// chosen_directions records the system of parameters used: the i-th new
/// variable acts on the original space as sum_j c_j X_j. The embedding's
/// source is the original module re-expressed in those coordinates; it is
/// the original module verbatim whenever the directions are the standard
/// coordinate vectors.
struct ASExtension {
    ModulePtr original;
    ASShape shape;
    std::vector<Vec> chosen_directions;
    ModuleMap embedding;  // source: original in chosen coordinates; target: as_module(shape)
    int search_height;
};

/// Among integer directions with entries in [-height, height], linearly
/// independent of the columns of `excluded`, returns one minimizing the
/// annihilator exponent of `a`; ties broken by normalizing the first
/// nonzero entry positive and taking the lexicographically smallest vector.
std::pair<Vec, int> minimal_direction_search(const ArtinianModule& n, const Vec& a,
                                             const Mat& excluded, int height);

/// The AS-extension M into as_module(shape). Requires a one-dimensional
/// socle. The heuristic direction search may return a non-minimal shape;
/// the certificate (injective equivariant embedding, exponents realized)
/// is verified regardless.
ASExtension as_extension(const ModulePtr& m, int search_height = 3);

}  // namespace artmod
