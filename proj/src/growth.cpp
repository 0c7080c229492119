#include "artmod/growth.hpp"

#include "artmod/errors.hpp"
#include "artmod/json_io.hpp"

namespace artmod {

std::vector<ASShape> extension_chain_shapes(const ASShape& base, int t_max) {
    if (t_max < 1) throw ValidationError("t_max must be >= 1");
    std::vector<ASShape> out;
    out.reserve(t_max);
    for (int t = 1; t <= t_max; ++t) {
        std::vector<int> e(base.g());
        for (int i = 0; i < base.g(); ++i) e[i] = t * base.exponents[i] - (t - 1);
        out.emplace_back(std::move(e));
    }
    return out;
}

std::pair<long, long> growth_bound(const ASShape& base, int t) {
    if (t < 1) throw ValidationError("t must be >= 1");
    long bound = 1, e = 1;
    bool nontrivial = false;
    for (int ei : base.exponents) {
        bound *= long(t) * (ei - 1) + 1;
        e *= ei;
        if (ei >= 2) nontrivial = true;
    }
    long strict = e;
    for (int i = 0; i < base.g(); ++i) strict *= t;
    // prod(t(e_i-1)+1) <= e*t^g, strictly for t >= 2 with some e_i >= 2;
    // the two sides coincide at t = 1.
    bool ok = (t == 1 || !nontrivial) ? bound <= strict : bound < strict;
    if (!ok)
        throw FalsificationError("growth bound inequality failed at t=" + std::to_string(t));
    return {bound, strict};
}

MultiplicationModel canonical_vmax_model() {
    return [](const GrowthStepContext& ctx) {
        MaximalComponent mc = maximal_component(ctx.prev_shape, ctx.base_shape);
        ModuleMap into_extension = product_map(ctx.prev_embedding, ctx.m1_embedding);
        ModuleMap phi = mc.projection.compose(into_extension);
        if (phi.is_surjective()) return phi;
        return corestrict_to_image(phi);
    };
}

MultiplicationModel supplied_chain_model(std::vector<std::pair<ModulePtr, Mat>> steps) {
    return [steps = std::move(steps)](const GrowthStepContext& ctx) {
        size_t idx = size_t(ctx.t) - 2;
        if (idx >= steps.size())
            throw ValidationError("chain file supplies no step for t=" + std::to_string(ctx.t));
        ModulePtr source = pontryagin_product_ptr(ctx.prev, ctx.m1);
        return ModuleMap(std::move(source), steps[idx].first, steps[idx].second);
    };
}

namespace {

GeometricVerdict run_geometric_check(const GeometricCandidate& cand, const GrowthOptions& opt,
                                     int t) {
    if (cand.left->g() == 1 && cyclic_generator(cand.left) && cyclic_generator(cand.right))
        return check_geometric_exhaustive_g1(cand);
    return check_geometric_sampled(cand, opt.probe_budget, opt.seed + std::uint64_t(t));
}

}  // namespace

GrowthExperiment run_growth_experiment(const ModulePtr& m1, const MultiplicationModel& model,
                                       const GrowthOptions& options) {
    if (options.t_max < 1) throw ValidationError("t_max must be >= 1");
    ASExtension ext1 = as_extension(m1, options.search_height);
    const ASShape base = ext1.shape;
    const int g = base.g();
    auto shapes = extension_chain_shapes(base, options.t_max);

    GrowthChain chain{base, ext1.embedding.source(), ext1.embedding, {}};
    GrowthReport report;
    report.base_shape = base;
    report.g = g;

    auto record = [&](int t, long r) {
        auto [bound, strict] = growth_bound(base, t);
        if (r > bound)
            throw FalsificationError("length r_" + std::to_string(t) + " = " +
                                     std::to_string(r) + " exceeds the bound " +
                                     std::to_string(bound));
        report.lengths.push_back(r);
        report.bounds.push_back(bound);
        report.strict_bounds.push_back(strict);
    };
    record(1, chain.m1->dim());

    ModulePtr prev = chain.m1;
    ModuleMap prev_embedding = chain.embedding1;
    for (int t = 2; t <= options.t_max; ++t) {
        const ASShape& prev_shape = shapes[t - 2];
        const ASShape& step_shape = shapes[t - 1];
        GrowthStepContext ctx{t, prev, prev_embedding, chain.m1, chain.embedding1,
                              base, prev_shape, step_shape};
        ModuleMap map = model(ctx);
        if (!map.is_surjective())
            throw ValidationError("step map at t=" + std::to_string(t) + " is not surjective");

        GeometricCandidate cand(
            prev, chain.m1, map.target(), map.matrix(),
            *prev == as_module(prev_shape) ? std::optional<ASShape>(prev_shape) : std::nullopt,
            *chain.m1 == as_module(base) ? std::optional<ASShape>(base) : std::nullopt);
        GeometricVerdict verdict = run_geometric_check(cand, options, t);
        if (verdict.status == GeometricStatus::Violated)
            throw ViolationError("geometric check violated at t=" + std::to_string(t),
                                 verdict_to_json(verdict).dump(2));

        ASExtension ext_prev{prev, prev_shape, {}, prev_embedding, options.search_height};
        ASExtension ext_m1{chain.m1, base, {}, chain.embedding1, options.search_height};
        ModuleMap embedding = extend_to_max_component(cand, ext_prev, ext_m1);

        record(t, map.target()->dim());
        prev = map.target();
        prev_embedding = embedding;
        chain.steps.push_back(GrowthStep{t, map.target(), std::move(map),
                                         std::move(embedding), std::move(verdict)});
    }

    report.fitted_exponent =
        report.lengths.size() >= 3 ? fit_growth_exponent(report.lengths) : Rat(0);
    report.conclusion = report.fitted_exponent <= Rat(g) + Rat(1, 5);
    return GrowthExperiment{std::move(chain), std::move(report)};
}

namespace {

// log x for rational x in [1, 2), via 2*atanh((x-1)/(x+1)); the series in
// z = (x-1)/(x+1) <= 1/3 is truncated far below the 1e-6 budget.
Rat log_series(const Rat& x, int terms) {
    Rat z = (x - 1) / (x + 1);
    Rat z2 = z * z;
    Rat sum = 0, pw = z;
    for (int k = 0; k < terms; ++k) {
        sum += pw / Rat(2 * k + 1);
        pw *= z2;
    }
    return 2 * sum;
}

Rat round_to_micro(const Rat& x) {
    Rat scaled = x * 1000000;
    Int floor_val;
    mpz_fdiv_q(floor_val.get_mpz_t(), scaled.get_num().get_mpz_t(),
               scaled.get_den().get_mpz_t());
    if (scaled - Rat(floor_val) >= Rat(1, 2)) floor_val += 1;
    Rat r(floor_val, Int(1000000));
    r.canonicalize();
    return r;
}

// natural log of a positive integer, exact-rational approximation rounded
// to denominator 1e6
Rat rational_log(long n) {
    if (n < 1) throw ValidationError("log of a non-positive integer");
    int shift = 0;
    long m = n;
    while (m >= 2) {
        m >>= 1;
        ++shift;
    }
    static const Rat log2 = log_series(Rat(2), 18);
    Rat mant(n, 1L << shift);
    mant.canonicalize();
    return round_to_micro(Rat(shift) * log2 + log_series(mant, 14));
}

// degree of the sequence if it is exactly polynomial; -1 otherwise
int exact_polynomial_degree(const std::vector<long>& r) {
    std::vector<Int> diff(r.begin(), r.end());
    for (int deg = 0; int(diff.size()) >= 2; ++deg) {
        bool constant = true;
        for (size_t i = 1; i < diff.size(); ++i)
            if (diff[i] != diff[0]) constant = false;
        if (constant) return deg;
        for (size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
    }
    return -1;
}

}  // namespace

Rat fit_growth_exponent(const std::vector<long>& lengths) {
    if (lengths.size() < 3) throw ValidationError("exponent fit needs at least 3 terms");
    for (long r : lengths)
        if (r < 1) throw ValidationError("exponent fit needs lengths >= 1");

    int deg = exact_polynomial_degree(lengths);
    if (deg >= 0) return Rat(deg);

    // least-squares slope of log r_t against log t, t >= 2
    std::vector<Rat> xs, ys;
    for (size_t i = 1; i < lengths.size(); ++i) {
        xs.push_back(rational_log(long(i) + 1));
        ys.push_back(rational_log(lengths[i]));
    }
    const int n = int(xs.size());
    Rat xbar = 0, ybar = 0;
    for (int i = 0; i < n; ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= n;
    ybar /= n;
    Rat num = 0, den = 0;
    for (int i = 0; i < n; ++i) {
        num += (xs[i] - xbar) * (ys[i] - ybar);
        den += (xs[i] - xbar) * (xs[i] - xbar);
    }
    if (den == 0) return Rat(0);
    return num / den;
}

}  // namespace artmod
