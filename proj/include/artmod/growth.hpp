#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "artmod/geometric.hpp"

namespace artmod {

/// Shape of the t-th extension in the chain: (t*e_i - (t-1))_i.
/// The shape at t = 1 is the base itself.
std::vector<ASShape> extension_chain_shapes(const ASShape& base, int t_max);

/// bound = prod(t(e_i-1)+1), strict = (prod e_i) * t^g. The displayed
/// inequality bound < strict holds for t >= 2 (whenever some e_i >= 2);
/// at t = 1 the two sides coincide. Both are verified in exact integers.
std::pair<long, long> growth_bound(const ASShape& base, int t);

struct GrowthStep {
    int t;
    ModulePtr module;       // M_t
    ModuleMap map;          // M_{t-1} * M_1 -> M_t, surjective
    ModuleMap embedding;    // M_t -> as_module(shape_t)
    GeometricVerdict verdict;
};

struct GrowthChain {
    ASShape base_shape;
    ModulePtr m1;           // M_1 in the coordinates of its AS-extension
    ModuleMap embedding1;   // M_1 -> as_module(base_shape)
    std::vector<GrowthStep> steps;  // t = 2, 3, ...
};

struct GrowthReport {
    ASShape base_shape;
    int g = 0;
    std::vector<long> lengths;        // r_t
    std::vector<long> bounds;         // prod(t(e_i-1)+1)
    std::vector<long> strict_bounds;  // (prod e_i) * t^g
    Rat fitted_exponent;
    bool conclusion = false;  // fitted_exponent <= g + 1/5
};

struct GrowthExperiment {
    GrowthChain chain;
    GrowthReport report;
};

/// Everything the multiplication model may use to produce the step map
/// M_{t-1} * M_1 -> M_t.
struct GrowthStepContext {
    int t;
    const ModulePtr& prev;
    const ModuleMap& prev_embedding;  // M_{t-1} -> as_module(shape_{t-1})
    const ModulePtr& m1;
    const ModuleMap& m1_embedding;
    const ASShape& base_shape;
    const ASShape& prev_shape;
    const ASShape& step_shape;
};

using MultiplicationModel = std::function<ModuleMap(const GrowthStepContext&)>;

/// The canonical model: push M_{t-1} * M_1 through the embeddings into
/// the extension product and project onto its maximal component, then
/// corestrict onto the image. Saturates (r_t = bound_t) for AS bases.
MultiplicationModel canonical_vmax_model();

/// A user-supplied chain: step t targets steps[t-2].first with the given
/// matrix from M_{t-1} * M_1.
MultiplicationModel supplied_chain_model(std::vector<std::pair<ModulePtr, Mat>> steps);

struct GrowthOptions {
    int t_max = 5;
    int search_height = 3;
    int probe_budget = 8;
    std::uint64_t seed = 0;
};

/// The full iteration: AS-extension of m1, then per step a geometric-checked
/// surjection and a certified embedding M_t -> as_module(shape_t), with
/// r_t <= bound_t asserted in exact integers at every step.
/// Throws ViolationError (witness attached) when a step map fails its
/// geometric check, FalsificationError when a certificate or bound fails.
/// The report's fitted_exponent is 0 when fewer than 3 lengths are recorded.
GrowthExperiment run_growth_experiment(const ModulePtr& m1, const MultiplicationModel& model,
                                       const GrowthOptions& options = {});

/// Growth exponent of a length sequence (r_1, r_2, ...). Exactly polynomial
/// sequences (some order of finite differences constant) report their exact
/// degree; otherwise the slope of the least-squares line through
/// (log t, log r_t) for t >= 2, on rational log approximations of absolute
/// precision 1e-6 — the only inexact quantities in the engine.
Rat fit_growth_exponent(const std::vector<long>& lengths);

}  // namespace artmod
