#pragma once

#include <string>

#include <json.hpp>

#include "artmod/as_module.hpp"
#include "artmod/geometric.hpp"
#include "artmod/module.hpp"
#include "artmod/pontryagin.hpp"

namespace artmod {

// forward declaration; growth.hpp includes geometric.hpp and is included by
// the implementation
struct GrowthReport;
struct GrowthExperiment;

using json = nlohmann::ordered_json;

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);
json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

json shape_to_json(const ASShape& s);
ASShape shape_from_json(const json& j);

/// The inner module record: { "g": int, "dim": int, "actions": [...] }.
json module_to_json(const ArtinianModule& m);
/// Accepts the inner record or a full module file; re-validates the
/// commutation and nilpotency invariants.
ArtinianModule module_from_json(const json& j);

/// Module file with schema_version and optional name/provenance.
json module_file_to_json(const ArtinianModule& m, const std::string& name = "",
                         const std::string& provenance = "");

/// Maps carry their endpoint module records: { source, target, matrix }.
json map_to_json(const ModuleMap& f);
ModuleMap map_from_json(const json& j);

json extension_to_json(const ASExtension& e);
json decomposition_to_json(const Decomposition& d);
json witness_to_json(const GeometricWitness& w);
json verdict_to_json(const GeometricVerdict& v);
json pas_report_to_json(const PasReport& r);
json growth_report_to_json(const GrowthReport& r);

/// Aligned text table (t, r_t, bound, strict).
std::string growth_report_table(const GrowthReport& r);
/// Two-column gnuplot data (t, r_t).
std::string growth_report_gnuplot(const GrowthReport& r);

/// Candidate file: left/right/target module records, the map matrix, and
/// optional AS shapes enabling the monomial sampling family.
GeometricCandidate candidate_from_json(const json& j);

struct SuppliedChain {
    ModulePtr m1;
    std::vector<std::pair<ModulePtr, Mat>> steps;
};
SuppliedChain chain_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace artmod
