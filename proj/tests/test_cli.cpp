#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "artmod/cli.hpp"
#include "artmod/growth.hpp"
#include "artmod/json_io.hpp"
#include "test_helpers.hpp"

using namespace artmod;
using namespace artmod::testing;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               fs::path("artmod_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_module_file(const std::string& path, const ArtinianModule& m) {
    write_json_file(path, module_file_to_json(m));
}

}  // namespace

TEST_CASE("product command") {
    TempDir tmp;
    write_module_file(tmp.file("a.json"), as_module(ASShape({2})));
    write_module_file(tmp.file("b.json"), as_module(ASShape({2})));
    auto r = run_cli({"product", tmp.file("a.json"), tmp.file("b.json"), "--out",
                      tmp.file("p.json")});
    CHECK(r.code == 0);
    ArtinianModule p = module_from_json(read_json_file(tmp.file("p.json")));
    CHECK(p.dim() == 4);

    // (2,3) x (2,3) -> 36, re-validated on load
    write_module_file(tmp.file("c.json"), as_module(ASShape({2, 3})));
    r = run_cli({"product", tmp.file("c.json"), tmp.file("c.json"), "--out",
                 tmp.file("p2.json")});
    CHECK(r.code == 0);
    CHECK(module_from_json(read_json_file(tmp.file("p2.json"))).dim() == 36);

    // mismatched g names both ring sizes
    r = run_cli({"product", tmp.file("a.json"), tmp.file("c.json")});
    CHECK(r.code == 1);
    CHECK(r.err.find("g=1") != std::string::npos);
    CHECK(r.err.find("g=2") != std::string::npos);
}

TEST_CASE("decompose command") {
    auto r = run_cli({"decompose", "--e", "2", "--f", "3", "--format", "table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("shape (4)") != std::string::npos);
    CHECK(r.out.find("shape (2)") != std::string::npos);

    r = run_cli({"decompose", "--e", "1", "--f", "5", "--format", "table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 blocks") != std::string::npos);
    CHECK(r.out.find("shape (5)") != std::string::npos);

    r = run_cli({"decompose", "--e", "2,2", "--f", "2,2", "--format", "table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("4 blocks") != std::string::npos);

    CHECK(run_cli({"decompose", "--e", "2", "--f", "0"}).code == 1);
}

TEST_CASE("facts command") {
    auto r = run_cli({"facts", "--max", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("e=2 f=3: d=0 ok, d=1 ok") != std::string::npos);

    r = run_cli({"facts", "--max", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "e=1 f=1: d=0 ok\n");
}

TEST_CASE("extend command") {
    TempDir tmp;
    write_module_file(tmp.file("as.json"), as_module(ASShape({2, 2})));
    auto r = run_cli({"extend", tmp.file("as.json"), "--out", tmp.file("ext.json")});
    CHECK(r.code == 0);
    json ext = read_json_file(tmp.file("ext.json"));
    CHECK(ext["shape"] == json::array({2, 2}));

    write_module_file(tmp.file("dual.json"), *matlis_dual(quotient_x2_y3_xy()));
    r = run_cli({"extend", tmp.file("dual.json"), "--out", tmp.file("ext2.json")});
    CHECK(r.code == 0);
    CHECK(read_json_file(tmp.file("ext2.json"))["shape"] == json::array({2, 3}));

    // socle dimension 2: witness lands in stderr JSON
    write_module_file(tmp.file("flat.json"), ArtinianModule::zero_action(1, 2));
    r = run_cli({"extend", tmp.file("flat.json")});
    CHECK(r.code == 1);
    CHECK(r.err.find("witness") != std::string::npos);
}

TEST_CASE("geometric-check command") {
    TempDir tmp;
    GeometricCandidate good = vmax_projection_candidate(ASShape({2}), ASShape({2}));
    json j;
    j["left"] = module_to_json(*good.left);
    j["right"] = module_to_json(*good.right);
    j["target"] = module_to_json(*good.target);
    j["matrix"] = mat_to_json(good.map.matrix());
    j["left_shape"] = json::array({2});
    j["right_shape"] = json::array({2});
    write_json_file(tmp.file("good.json"), j);
    auto r = run_cli({"geometric-check", tmp.file("good.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("verified-exhaustive") != std::string::npos);

    json z = j;
    z["target"] = module_to_json(as_module(ASShape({1})));
    z["matrix"] = mat_to_json(Mat::zero(1, 4));
    write_json_file(tmp.file("zero.json"), z);
    r = run_cli({"geometric-check", tmp.file("zero.json")});
    CHECK(r.code == 2);
    CHECK(r.out.find("violated") != std::string::npos);
    CHECK(r.out.find("witness") != std::string::npos);

    // g=2 sampled verdicts are reproducible byte for byte
    GeometricCandidate g2 = vmax_projection_candidate(ASShape({2, 2}), ASShape({2, 2}));
    json jj;
    jj["left"] = module_to_json(*g2.left);
    jj["right"] = module_to_json(*g2.right);
    jj["target"] = module_to_json(*g2.target);
    jj["matrix"] = mat_to_json(g2.map.matrix());
    jj["left_shape"] = json::array({2, 2});
    jj["right_shape"] = json::array({2, 2});
    write_json_file(tmp.file("g2.json"), jj);
    auto r1 = run_cli({"geometric-check", tmp.file("g2.json"), "--budget", "16", "--seed", "7"});
    auto r2 = run_cli({"geometric-check", tmp.file("g2.json"), "--budget", "16", "--seed", "7"});
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
}

TEST_CASE("growth command") {
    TempDir tmp;
    auto r = run_cli({"growth", "--shape", "2,2", "--t-max", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("25") != std::string::npos);
    CHECK(r.out.find("conclusion: holds") != std::string::npos);

    r = run_cli({"growth", "--shape", "1", "--t-max", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fitted exponent: 0") != std::string::npos);

    r = run_cli({"growth", "--shape", "2,3", "--t-max", "4", "--format", "json",
                 "--plot-out", tmp.file("plot.dat"), "--out", tmp.file("report.json")});
    CHECK(r.code == 0);
    json report = read_json_file(tmp.file("report.json"));
    CHECK(report["lengths"] == json::array({6, 15, 28, 45}));
    std::ifstream plot(tmp.file("plot.dat"));
    std::stringstream plot_data;
    plot_data << plot.rdbuf();
    CHECK(plot_data.str() == "1 6\n2 15\n3 28\n4 45\n");

    CHECK(run_cli({"growth"}).code == 1);
}

TEST_CASE("growth command accepts a chain file") {
    TempDir tmp;
    GrowthOptions opt;
    opt.t_max = 3;
    GrowthExperiment canonical =
        run_growth_experiment(as_module_ptr(ASShape({2})), canonical_vmax_model(), opt);
    json chain;
    chain["schema_version"] = 1;
    chain["m1"] = module_to_json(*canonical.chain.m1);
    chain["steps"] = json::array();
    for (const GrowthStep& s : canonical.chain.steps) {
        json step;
        step["module"] = module_to_json(*s.module);
        step["matrix"] = mat_to_json(s.map.matrix());
        chain["steps"].push_back(step);
    }
    write_json_file(tmp.file("chain.json"), chain);
    auto r = run_cli({"growth", "--chain", tmp.file("chain.json"), "--t-max", "3",
                      "--format", "json"});
    CHECK(r.code == 0);
    json report = json::parse(r.out);
    CHECK(report["lengths"] == json::array({2, 3, 4}));
}

TEST_CASE("oracle command") {
    TempDir tmp;
    write_module_file(tmp.file("p.json"), pontryagin_product(as_module(ASShape({2})),
                                                             as_module(ASShape({2}))));
    auto r = run_cli({"oracle", tmp.file("p.json"), "--var", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "3 1\n");

    write_module_file(tmp.file("e5.json"), as_module(ASShape({5})));
    r = run_cli({"oracle", tmp.file("e5.json")});
    CHECK(r.out == "5\n");

    write_module_file(tmp.file("flat.json"), ArtinianModule::zero_action(2, 3));
    r = run_cli({"oracle", tmp.file("flat.json"), "--direction", "1,1"});
    CHECK(r.out == "1 1 1\n");
}

TEST_CASE("dual command round-trips") {
    TempDir tmp;
    write_module_file(tmp.file("m.json"), *quotient_x2_y3_xy());
    CHECK(run_cli({"dual", tmp.file("m.json"), "--out", tmp.file("d.json")}).code == 0);
    CHECK(run_cli({"dual", tmp.file("d.json"), "--out", tmp.file("dd.json")}).code == 0);
    CHECK(module_from_json(read_json_file(tmp.file("dd.json"))) == *quotient_x2_y3_xy());
}

TEST_CASE("serialization round-trips byte-identically") {
    auto m = matlis_dual(quotient_x2_y3_xy());
    json once = module_file_to_json(*m);
    json twice = module_file_to_json(module_from_json(once));
    CHECK(once.dump() == twice.dump());

    Decomposition d = cg_decomposition(ASShape({2}), ASShape({3}));
    json dj = decomposition_to_json(d);
    CHECK(dj.dump() == decomposition_to_json(cg_decomposition(ASShape({2}), ASShape({3})))
                           .dump());

    // rationals keep their canonical form through a round trip
    Mat mm = mat({{1, -2}, {0, 1}});
    mm(0, 0) = q(3, 6);
    CHECK(mat_from_json(mat_to_json(mm)) == mm);

    // maps carry their endpoints and re-validate equivariance on load
    ModuleMap f = as_self_duality(ASShape({2, 2}));
    ModuleMap f2 = map_from_json(map_to_json(f));
    CHECK(f2.matrix() == f.matrix());
    CHECK(map_to_json(f2).dump() == map_to_json(f).dump());
}

TEST_CASE("module files are validated on load") {
    TempDir tmp;
    json bad = module_file_to_json(as_module(ASShape({2})));
    bad["schema_version"] = 99;
    write_json_file(tmp.file("bad.json"), bad);
    CHECK(run_cli({"oracle", tmp.file("bad.json")}).code == 1);

    json broken = module_file_to_json(as_module(ASShape({2})));
    broken["module"]["actions"][0][0][1] = "1";  // not nilpotent any more
    write_json_file(tmp.file("broken.json"), broken);
    CHECK(run_cli({"oracle", tmp.file("broken.json")}).code == 1);

    CHECK(run_cli({"oracle", tmp.file("missing.json")}).code == 1);
}
