#include "artmod/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "artmod/errors.hpp"
#include "artmod/growth.hpp"

namespace artmod {

namespace {

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(long(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw ValidationError("expected a rational as \"p/q\" string or integer");
}

}  // namespace

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_to_string(x));
    return a;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected a vector (JSON array)");
    Vec v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
    return rows;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected a matrix (array of rows)");
    std::vector<std::vector<Rat>> rows;
    rows.reserve(j.size());
    for (const auto& r : j) rows.push_back(vec_from_json(r));
    return Mat::from_rows(rows);
}

json shape_to_json(const ASShape& s) {
    return json(s.exponents);
}

ASShape shape_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected a shape (array of integers)");
    std::vector<int> e;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ValidationError("shape entries must be integers");
        e.push_back(x.get<int>());
    }
    return ASShape(std::move(e));
}

json module_to_json(const ArtinianModule& m) {
    json j;
    j["g"] = m.g();
    j["dim"] = m.dim();
    json acts = json::array();
    for (int i = 0; i < m.g(); ++i) acts.push_back(mat_to_json(m.action(i)));
    j["actions"] = acts;
    return j;
}

ArtinianModule module_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("expected a module record");
    if (j.contains("module")) {
        if (j.contains("schema_version") && j["schema_version"].get<int>() != 1)
            throw ValidationError("unsupported schema_version");
        return module_from_json(j["module"]);
    }
    if (!j.contains("g") || !j.contains("dim") || !j.contains("actions"))
        throw ValidationError("module record needs g, dim, actions");
    int g = j["g"].get<int>();
    int dim = j["dim"].get<int>();
    std::vector<Mat> actions;
    for (const auto& a : j["actions"]) {
        Mat m = mat_from_json(a);
        if (m.rows() != dim || m.cols() != dim)
            throw ValidationError("action matrix does not match the declared dimension");
        actions.push_back(std::move(m));
    }
    if (int(actions.size()) != g)
        throw ValidationError("expected one action matrix per variable");
    if (g == 0 && dim != 0)
        throw ValidationError("a module over 0 variables must have dim 0");
    return ArtinianModule(g, std::move(actions));
}

json module_file_to_json(const ArtinianModule& m, const std::string& name,
                         const std::string& provenance) {
    json j;
    j["schema_version"] = 1;
    if (!name.empty()) j["name"] = name;
    if (!provenance.empty()) j["provenance"] = provenance;
    j["module"] = module_to_json(m);
    return j;
}

json map_to_json(const ModuleMap& f) {
    json j;
    j["source"] = module_to_json(*f.source());
    j["target"] = module_to_json(*f.target());
    j["matrix"] = mat_to_json(f.matrix());
    return j;
}

ModuleMap map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
        !j.contains("matrix"))
        throw ValidationError("map record needs source, target, matrix");
    return ModuleMap(share(module_from_json(j["source"])),
                     share(module_from_json(j["target"])), mat_from_json(j["matrix"]));
}

json extension_to_json(const ASExtension& e) {
    json j;
    j["schema_version"] = 1;
    j["shape"] = shape_to_json(e.shape);
    json dirs = json::array();
    for (const Vec& d : e.chosen_directions) dirs.push_back(vec_to_json(d));
    j["chosen_directions"] = dirs;
    j["embedding_matrix"] = mat_to_json(e.embedding.matrix());
    j["search_height"] = e.search_height;
    return j;
}

json decomposition_to_json(const Decomposition& d) {
    json j;
    j["schema_version"] = 1;
    j["e"] = shape_to_json(d.e);
    j["f"] = shape_to_json(d.f);
    json blocks = json::array();
    for (const DecompositionBlock& b : d.blocks) {
        json bj;
        bj["index"] = json(b.index);
        bj["shape"] = shape_to_json(b.shape);
        bj["generator"] = vec_to_json(b.generator);
        bj["embedding"] = mat_to_json(b.embedding.matrix());
        blocks.push_back(std::move(bj));
    }
    j["blocks"] = blocks;
    return j;
}

json witness_to_json(const GeometricWitness& w) {
    json j;
    j["left_basis"] = mat_to_json(w.left_basis);
    j["right_basis"] = mat_to_json(w.right_basis);
    j["achieved"] = w.achieved;
    j["required"] = w.required;
    return j;
}

json verdict_to_json(const GeometricVerdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["probes_used"] = v.probes_used;
    if (v.seed) j["seed"] = *v.seed;
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    return j;
}

json pas_report_to_json(const PasReport& r) {
    json j;
    j["injective_on_vmax"] = r.injective_on_vmax;
    j["image_equality"] = r.image_equality;
    j["rank_map"] = r.rank_map;
    j["rank_restricted"] = r.rank_restricted;
    j["dim_vmax"] = r.dim_vmax;
    return j;
}

json growth_report_to_json(const GrowthReport& r) {
    json j;
    j["schema_version"] = 1;
    j["base_shape"] = shape_to_json(r.base_shape);
    j["g"] = r.g;
    j["lengths"] = json(r.lengths);
    j["bounds"] = json(r.bounds);
    j["strict_bounds"] = json(r.strict_bounds);
    j["fitted_exponent"] = rat_to_string(r.fitted_exponent);
    j["conclusion"] = r.conclusion;
    return j;
}

std::string growth_report_table(const GrowthReport& r) {
    std::ostringstream os;
    os << std::setw(4) << "t" << std::setw(10) << "r_t" << std::setw(10) << "bound"
       << std::setw(10) << "strict" << '\n';
    for (size_t i = 0; i < r.lengths.size(); ++i)
        os << std::setw(4) << (i + 1) << std::setw(10) << r.lengths[i] << std::setw(10)
           << r.bounds[i] << std::setw(10) << r.strict_bounds[i] << '\n';
    os << "fitted exponent: " << rat_to_string(r.fitted_exponent)
       << " (~" << mpq_class(r.fitted_exponent).get_d() << ")"
       << ", g = " << r.g << ", conclusion: " << (r.conclusion ? "holds" : "fails") << '\n';
    return os.str();
}

std::string growth_report_gnuplot(const GrowthReport& r) {
    std::ostringstream os;
    for (size_t i = 0; i < r.lengths.size(); ++i)
        os << (i + 1) << ' ' << r.lengths[i] << '\n';
    return os.str();
}

GeometricCandidate candidate_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("expected a candidate record");
    for (const char* k : {"left", "right", "target", "matrix"})
        if (!j.contains(k))
            throw ValidationError(std::string("candidate record needs field ") + k);
    ModulePtr left = share(module_from_json(j["left"]));
    ModulePtr right = share(module_from_json(j["right"]));
    ModulePtr target = share(module_from_json(j["target"]));
    Mat matrix = mat_from_json(j["matrix"]);
    std::optional<ASShape> ls, rs;
    if (j.contains("left_shape")) ls = shape_from_json(j["left_shape"]);
    if (j.contains("right_shape")) rs = shape_from_json(j["right_shape"]);
    return GeometricCandidate(std::move(left), std::move(right), std::move(target),
                              std::move(matrix), std::move(ls), std::move(rs));
}

SuppliedChain chain_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m1") || !j.contains("steps"))
        throw ValidationError("chain record needs m1 and steps");
    SuppliedChain c;
    c.m1 = share(module_from_json(j["m1"]));
    for (const auto& s : j["steps"]) {
        if (!s.contains("module") || !s.contains("matrix"))
            throw ValidationError("chain step needs module and matrix");
        c.steps.emplace_back(share(module_from_json(s["module"])),
                             mat_from_json(s["matrix"]));
    }
    return c;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace artmod
