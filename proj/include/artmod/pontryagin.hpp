#pragma once

#include <utility>
#include <vector>

#include "artmod/as_module.hpp"
#include "artmod/module.hpp"

namespace artmod {

/// Pontryagin product M * M': the tensor space with diagonal action
/// T_i = X_i (x) I + I (x) Y_i. Tensor index is (row-major) source index of
/// m outer, of m2 inner. Commutation and nilpotency are re-verified on
/// construction. Products beyond total dimension 4096 are rejected.
ArtinianModule pontryagin_product(const ArtinianModule& m, const ArtinianModule& m2);
ModulePtr pontryagin_product_ptr(const ModulePtr& m, const ModulePtr& m2);

/// Tensor product of maps (Kronecker matrix), equivariant for the product
/// actions.
ModuleMap product_map(const ModuleMap& f, const ModuleMap& f2);

/// Closed-form block shapes of the product of two AS-modules:
/// for each I in prod [0, min(e_i,f_i)-1], the shape (e_i+f_i-1-2*I_i)_i.
std::vector<std::pair<std::vector<int>, ASShape>> cg_block_shapes(const ASShape& e,
                                                                  const ASShape& f);

/// The (d+1)x(d+1) binomial matrix expressing t^{e+f-2d-2} on homogeneous
/// degree-d elements of k[x,y]/(x^e,y^f) (coordinates a_d,...,a_0).
Mat fact1_matrix(int e, int f, int d);
bool verify_fact1(int e, int f, int d);  // determinant nonzero

/// The d x (d+1) matrix expressing t^{e+f-2d-1} on degree-d elements.
Mat fact2_matrix(int e, int f, int d);

struct HighestGenerator {
    Vec coeffs;      // (a_d, ..., a_0): t^(d) = sum a_j x^j y^{d-j}
    Vec in_product;  // the same element in the e*f-dimensional product space
};

/// The degree-d element t^(d) spanning the kernel of fact2_matrix,
/// normalized so its first nonzero coefficient (in a_d,...,a_0 order) is 1.
HighestGenerator highest_generator(int e, int f, int d);

struct DecompositionBlock {
    std::vector<int> index;  // I
    ASShape shape;
    Vec generator;        // product-space coordinates of prod_i t_i^{(I_i)}
    ModuleMap embedding;  // as_module(shape) -> product
};

/// Certified direct-sum decomposition M * M' = (+) V_I for AS factors.
/// The assembled basis (all embedded block bases, concatenated in block
/// order) is exactly invertible; failure of that certificate is raised as
/// FalsificationError.
struct Decomposition {
    ASShape e, f;
    ModulePtr product;
    std::vector<DecompositionBlock> blocks;
    Mat assembled_basis;
    Mat assembled_inverse;
};

/// Coordinates with e_i > f_i are handled with the factor roles swapped,
/// which the tensor-product construction makes coordinate-wise legal.
Decomposition cg_decomposition(const ASShape& e, const ASShape& f);

struct MaximalComponent {
    ASShape shape;         // (e_i + f_i - 1)
    ModuleMap projection;  // product -> V_max, kills all other blocks
    ModuleMap section;     // V_max -> product; projection o section = id
};

MaximalComponent maximal_component(const ASShape& e, const ASShape& f);
MaximalComponent maximal_component(const Decomposition& d);

}  // namespace artmod
