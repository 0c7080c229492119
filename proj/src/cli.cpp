#include "artmod/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "artmod/errors.hpp"
#include "artmod/growth.hpp"
#include "artmod/json_io.hpp"

namespace artmod::cli {

namespace {

std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> e;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            e.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ValidationError("cannot parse list entry '" + tok + "'");
        }
    }
    if (e.empty()) throw ValidationError("empty list");
    return e;
}

ASShape parse_shape(const std::string& spec) {
    return ASShape(parse_int_list(spec));
}

ArtinianModule load_module(const std::string& path) {
    return module_from_json(read_json_file(path));
}

int cmd_product(const std::string& left, const std::string& right, const std::string& out_path,
                std::ostream& out) {
    ArtinianModule prod = pontryagin_product(load_module(left), load_module(right));
    json j = module_file_to_json(prod);
    if (!out_path.empty()) {
        write_json_file(out_path, j);
        out << "product module of dimension " << prod.dim() << " written to " << out_path
            << '\n';
    } else {
        out << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_decompose(const std::string& e_spec, const std::string& f_spec,
                  const std::string& out_path, const std::string& format, std::ostream& out) {
    ASShape e = parse_shape(e_spec), f = parse_shape(f_spec);
    Decomposition d = cg_decomposition(e, f);
    std::ostringstream table;
    table << "product dimension " << d.product->dim() << ", " << d.blocks.size()
          << " blocks\n";
    for (const DecompositionBlock& b : d.blocks) {
        table << "  I = (";
        for (size_t i = 0; i < b.index.size(); ++i)
            table << (i ? "," : "") << b.index[i];
        table << ")  shape (";
        for (size_t i = 0; i < b.shape.exponents.size(); ++i)
            table << (i ? "," : "") << b.shape.exponents[i];
        table << ")  dim " << b.shape.total_dim() << '\n';
    }
    json j = decomposition_to_json(d);
    if (!out_path.empty()) {
        write_json_file(out_path, j);
        out << table.str();
    } else if (format == "table") {
        out << table.str();
    } else {
        out << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_facts(int max, std::ostream& out) {
    if (max < 1) throw ValidationError("--max must be >= 1");
    bool all_ok = true;
    for (int e = 1; e <= max; ++e) {
        for (int f = e; f <= max; ++f) {
            ModulePtr product = pontryagin_product_ptr(as_module_ptr(ASShape({e})),
                                                       as_module_ptr(ASShape({f})));
            const Mat& t = product->action(0);
            out << "e=" << e << " f=" << f << ":";
            for (int d = 0; d < e; ++d) {
                bool ok = verify_fact1(e, f, d);
                if (ok) {
                    try {
                        ok = rank(fact2_matrix(e, f, d)) == d;
                        HighestGenerator gen = highest_generator(e, f, d);
                        Vec v = gen.in_product;
                        for (int k = 0; k < e + f - 2 * d - 2; ++k) v = t.apply(v);
                        ok = ok && !is_zero_vec(v) && is_zero_vec(t.apply(v));
                    } catch (const FalsificationError&) {
                        ok = false;
                    }
                }
                out << (d ? "," : "") << " d=" << d << (ok ? " ok" : " FAIL");
                all_ok = all_ok && ok;
            }
            out << '\n';
        }
    }
    return all_ok ? 0 : 3;
}

int cmd_extend(const std::string& in, int height, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
    ModulePtr m = share(load_module(in));
    if (m->dim() == 0 || !has_no_decomposable_submodules(m)) {
        json witness;
        witness["error"] = "module has decomposable submodules (socle dimension >= 2)";
        if (auto w = decomposable_submodule_witness(m))
            witness["witness"] = mat_to_json(w->matrix());
        err << witness.dump(2) << '\n';
        return 1;
    }
    ASExtension ext = as_extension(m, height);
    json j = extension_to_json(ext);
    if (!out_path.empty()) {
        write_json_file(out_path, j);
        out << "extension shape (";
        for (size_t i = 0; i < ext.shape.exponents.size(); ++i)
            out << (i ? "," : "") << ext.shape.exponents[i];
        out << ") written to " << out_path << '\n';
    } else {
        out << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_geometric_check(const std::string& path, int budget, std::uint64_t seed,
                        std::ostream& out) {
    GeometricCandidate cand = candidate_from_json(read_json_file(path));
    GeometricVerdict verdict;
    if (cand.left->g() == 1 && cyclic_generator(cand.left) && cyclic_generator(cand.right))
        verdict = check_geometric_exhaustive_g1(cand);
    else
        verdict = check_geometric_sampled(cand, budget, seed);
    out << verdict_to_json(verdict).dump(2) << '\n';
    return verdict.status == GeometricStatus::Violated ? 2 : 0;
}

int cmd_growth(const std::string& shape_spec, const std::string& chain_path, int t_max,
               int budget, std::uint64_t seed, int height, const std::string& out_path,
               const std::string& plot_path, const std::string& format, std::ostream& out) {
    GrowthOptions opt;
    opt.t_max = t_max;
    opt.probe_budget = budget;
    opt.seed = seed;
    opt.search_height = height;

    GrowthExperiment exp = [&] {
        if (!chain_path.empty()) {
            SuppliedChain chain = chain_from_json(read_json_file(chain_path));
            return run_growth_experiment(chain.m1, supplied_chain_model(chain.steps), opt);
        }
        if (shape_spec.empty())
            throw ValidationError("growth needs --shape or --chain");
        return run_growth_experiment(as_module_ptr(parse_shape(shape_spec)),
                                     canonical_vmax_model(), opt);
    }();

    if (!out_path.empty()) write_json_file(out_path, growth_report_to_json(exp.report));
    if (!plot_path.empty()) {
        std::ofstream plot(plot_path);
        if (!plot) throw ValidationError("cannot write " + plot_path);
        plot << growth_report_gnuplot(exp.report);
    }
    if (format == "json")
        out << growth_report_to_json(exp.report).dump(2) << '\n';
    else
        out << growth_report_table(exp.report);
    return 0;
}

int cmd_oracle(const std::string& in, int var, const std::string& direction_spec,
               std::ostream& out) {
    ArtinianModule m = load_module(in);
    Mat op = [&] {
        if (!direction_spec.empty()) {
            std::vector<int> d = parse_int_list(direction_spec);
            Vec c;
            for (int x : d) c.push_back(Rat(long(x)));
            return m.direction_action(c);
        }
        if (var < 0 || var >= m.g())
            throw ValidationError("variable index out of range");
        return m.action(var);
    }();
    std::vector<int> type = jordan_type_oracle(op);
    for (size_t i = 0; i < type.size(); ++i) out << (i ? " " : "") << type[i];
    out << '\n';
    return 0;
}

int cmd_dual(const std::string& in, const std::string& out_path, std::ostream& out) {
    ArtinianModule d = matlis_dual(load_module(in));
    json j = module_file_to_json(d);
    if (!out_path.empty()) {
        write_json_file(out_path, j);
        out << "dual module written to " << out_path << '\n';
    } else {
        out << j.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"artmod: exact certificates for Artinian modules over local rings"};
    app.require_subcommand(1);

    std::string left, right, in_path, out_path, plot_path, chain_path;
    std::string e_spec, f_spec, shape_spec, direction_spec;
    std::string format = "json";
    int max = 10, height = 3, t_max = 5, budget = 64, growth_budget = 8, var = 0;
    std::uint64_t seed = 0;

    auto* product = app.add_subcommand("product", "Pontryagin product of two module files");
    product->add_option("left", left, "left module file")->required();
    product->add_option("right", right, "right module file")->required();
    product->add_option("--out", out_path, "output module file");

    auto* decompose =
        app.add_subcommand("decompose", "certified block decomposition of an AS product");
    decompose->add_option("--e", e_spec, "first shape, comma-separated")->required();
    decompose->add_option("--f", f_spec, "second shape, comma-separated")->required();
    decompose->add_option("--out", out_path, "output JSON file");
    decompose->add_option("--format", format, "json|table");

    auto* facts = app.add_subcommand("facts", "binomial-matrix fact sweep for d < e <= f <= max");
    facts->add_option("--max", max, "sweep bound");

    auto* extend = app.add_subcommand("extend", "AS-extension of a module file");
    extend->add_option("in", in_path, "input module file")->required();
    extend->add_option("--height", height, "direction search height");
    extend->add_option("--out", out_path, "output JSON file");

    auto* geom = app.add_subcommand("geometric-check", "check a multiplication map candidate");
    geom->add_option("candidate", in_path, "candidate JSON file")->required();
    geom->add_option("--budget", budget, "probe budget per side");
    geom->add_option("--seed", seed, "probe seed");

    auto* growth = app.add_subcommand("growth", "extension chain lengths and bounds");
    growth->add_option("--shape", shape_spec, "base shape for the canonical chain");
    growth->add_option("--chain", chain_path, "user-supplied chain JSON file");
    growth->add_option("--t-max", t_max, "chain length");
    growth->add_option("--budget", growth_budget, "probe budget for geometric checks");
    growth->add_option("--seed", seed, "probe seed");
    growth->add_option("--height", height, "direction search height");
    growth->add_option("--out", out_path, "report JSON file");
    growth->add_option("--plot-out", plot_path, "gnuplot two-column (t, r_t) file");
    growth->add_option("--format", format, "json|table");
    growth->preparse_callback([&](size_t) { format = "table"; });

    auto* oracle = app.add_subcommand("oracle", "Jordan type of an action or direction");
    oracle->add_option("in", in_path, "input module file")->required();
    oracle->add_option("--var", var, "variable index (default 0)");
    oracle->add_option("--direction", direction_spec, "direction coefficients, comma-separated");

    auto* dual = app.add_subcommand("dual", "Matlis dual of a module file");
    dual->add_option("in", in_path, "input module file")->required();
    dual->add_option("--out", out_path, "output module file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    try {
        if (product->parsed()) return cmd_product(left, right, out_path, out);
        if (decompose->parsed()) return cmd_decompose(e_spec, f_spec, out_path, format, out);
        if (facts->parsed()) return cmd_facts(max, out);
        if (extend->parsed()) return cmd_extend(in_path, height, out_path, out, err);
        if (geom->parsed()) return cmd_geometric_check(in_path, budget, seed, out);
        if (growth->parsed())
            return cmd_growth(shape_spec, chain_path, t_max, growth_budget, seed, height,
                              out_path, plot_path, format, out);
        if (oracle->parsed()) return cmd_oracle(in_path, var, direction_spec, out);
        if (dual->parsed()) return cmd_dual(in_path, out_path, out);
    } catch (const FalsificationError& e) {
        err << "falsification: " << e.what() << '\n';
        return 3;
    } catch (const ViolationError& e) {
        err << e.what() << '\n';
        out << e.witness_json << '\n';
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace artmod::cli
