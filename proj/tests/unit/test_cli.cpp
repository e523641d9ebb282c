#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "support.hpp"

namespace reeb::test {
namespace {

using nlohmann::json;

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = cli::parse_and_dispatch(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json report(std::vector<std::string> args) {
    const CliRun r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

std::string fx(const std::string& name) { return fixture(name).string(); }
std::string cv(const std::string& name) { return curve_file(name).string(); }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const std::filesystem::path p = std::filesystem::temp_directory_path() / ("reebtk_test_" + name);
    std::ofstream(p) << content;
    return p;
}

TEST(Cli, DecideBottOnCatTorus) {
    EXPECT_EQ(report({"decide-bott", "--manifold", fx("cat_torus.json"), "--euler", "0"}),
              json::parse(R"({"bott_integrable": true})"));
    EXPECT_EQ(report({"decide-bott", "--manifold", fx("cat_torus.json"), "--euler", "2"}),
              json::parse(R"({"bott_integrable": false})"));
}

TEST(Cli, DecideBottOnSeifertVertex) {
    for (const char* e : {"0", "1,0,0", "1,1,1", "0,1,-4"}) {
        EXPECT_EQ(report({"decide-bott", "--manifold", fx("seifert_vertex.json"), "--euler", e}),
                  json::parse(R"({"bott_integrable": true})"))
            << e;
    }
}

TEST(Cli, DecideGraphLinkOnCatTorus) {
    EXPECT_EQ(report({"decide-graphlink", "--manifold", fx("cat_torus.json"), "--class", "1"}),
              json::parse(R"({"representable": false})"));
    EXPECT_EQ(report({"decide-graphlink", "--manifold", fx("cat_torus.json"), "--class", "0"}),
              json::parse(R"({"representable": true})"));
    EXPECT_EQ(report({"decide-graphlink", "--manifold", fx("cat_plus_s1s2.json"), "--class", "4,2"}),
              json::parse(R"({"representable": true})"));
}

TEST(Cli, CatmapVerify) {
    for (const char* n : {"0", "3"}) {
        const json j = report({"catmap-verify", "--n", n});
        EXPECT_TRUE(j["passed"].get<bool>());
        EXPECT_LT(j["equivariance_residual"].get<double>(), 1e-9);
        EXPECT_LT(j["determinant_residual"].get<double>(), 1e-9);
        EXPECT_LT(j["fibonacci_residual"].get<double>(), 1e-9);
        EXPECT_EQ(j["torsion"].get<long>(), std::stol(n));
    }
}

TEST(Cli, HomologyAndSnf) {
    EXPECT_EQ(report({"homology", "--manifold", fx("cat_torus_presented.json")})["H1"]["group"], "Z");
    EXPECT_EQ(report({"homology", "--manifold", fx("seifert_vertex.json")})["H1"]["group"], "Z + Z/2 + Z/2");
    const auto m = temp_file("snf.json", "[[2, 4], [6, 8]]");
    const json s = report({"snf", "--matrix", m.string()});
    EXPECT_EQ(s["invariant_factors"], json::parse("[2, 4]"));
    EXPECT_EQ(s["rank"], 2);
    const auto rel = temp_file("rel.json", R"({"ngens": 3, "relations": [[2, 0, 0]]})");
    EXPECT_EQ(report({"homology", "--matrix", rel.string()})["H1"]["group"], "Z^2 + Z/2");
}

TEST(Cli, JsjAndEuler) {
    const json j = report({"jsj", "--manifold", fx("cat_torus.json")});
    EXPECT_EQ(j["vertices"], 1);
    EXPECT_EQ(j["betti"], 1);
    const auto link = temp_file("link.json",
                                R"({"components":[{"type":"elliptic","a":[0,0,1]},{"type":"hyperbolic","a":[0,0,1]}]})");
    const json e = report({"euler", "--manifold", fx("seifert_vertex.json"), "--link", link.string()});
    EXPECT_EQ(e["euler_pd"], json::parse(R"({"a":[0,0,0],"b":[]})"));
    EXPECT_TRUE(e["representable"].get<bool>());
}

TEST(Cli, D2Bookkeeping) {
    const json j = report({"d2", "--manifold", fx("seifert_vertex.json"), "--euler", "0", "--class", "1,0,1"});
    EXPECT_TRUE(j["additivity"].get<bool>());
    EXPECT_TRUE(j["doubling"].get<bool>());
    EXPECT_TRUE(j["antisymmetry"].get<bool>());
    EXPECT_TRUE(j["lutz_relation"].get<bool>());
}

TEST(Cli, CurveCommands) {
    const json c = report({"check-contact", "--curve", cv("alpha_0.json")});
    EXPECT_TRUE(c["contact"].get<bool>());
    EXPECT_LT(c["max_defect"].get<double>(), 0.0);

    const json w = report({"winding", "--curve", cv("alpha_3.json")});
    EXPECT_NEAR(w["winding"].get<double>(), -kPi / 4.0 - 3.0 * kTwoPi, 1e-6);

    EXPECT_EQ(report({"torsion", "--n", "4"})["torsion"], 4);
    EXPECT_EQ(report({"torsion", "--curve", cv("alpha_3.json")})["torsion"], 3);

    const json t = report({"lutz-twist", "--curve", cv("twist_segment.json"), "--t0", "-0.5", "--t1", "0.5"});
    EXPECT_TRUE(t["passed"].get<bool>());
    EXPECT_NEAR(t["winding_delta"].get<double>(), -kTwoPi, 1e-6);

    const json f = report({"reeb-flow", "--curve", cv("klein_normal.json"), "--t0", "0.25", "--T", "2", "--dt",
                           "0.01"});
    EXPECT_EQ(f["status"], "completed");
    EXPECT_NEAR(f["final"]["x1"].get<double>(), 2.0, 1e-12);
    EXPECT_EQ(f["final"]["t"], 0.25);

    const json p = report({"perturb"});
    ASSERT_EQ(p["critical_points"].size(), 2u);
    EXPECT_EQ(p["critical_points"][0]["type"], "saddle");
    EXPECT_EQ(p["critical_points"][1]["type"], "minimum");
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::string> args{"snf", "--matrix", temp_file("det.json", "[[3,1,4],[1,5,9],[2,6,5]]").string()};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> flow{"reeb-flow", "--curve", cv("alpha_0.json"), "--T", "1", "--dt", "0.01"};
    EXPECT_EQ(run(flow).out, run(flow).out);
}

TEST(Cli, HumanOutput) {
    const CliRun r = run({"decide-bott", "--manifold", fx("cat_torus.json"), "--euler", "0", "--human"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("bott_integrable"), std::string::npos);
    EXPECT_NE(r.out.find("true"), std::string::npos);
    EXPECT_EQ(r.out.find('{'), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
    CliRun r = run({"frobnicate"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("frobnicate"), std::string::npos);

    r = run({"decide-bott", "--manifold", fx("cat_torus.json")});
    EXPECT_EQ(r.code, 2);

    r = run({"decide-bott", "--manifold", "/nonexistent.json", "--euler", "0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("nonexistent.json"), std::string::npos);

    r = run({"decide-graphlink", "--manifold", fx("cat_torus.json"), "--class", "1,2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("class"), std::string::npos);

    const auto bad = temp_file("bad_manifold.json", R"({"summands":[{"vertices":1,"edges":[]}],"k":0,"ngens":1,
        "h1_relations":[],"rho":[[1]],"generator_names":["c"]})");
    r = run({"jsj", "--manifold", bad.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("rho"), std::string::npos) << r.err;

    const auto malformed = temp_file("malformed.json", "{\"summands\": [");
    r = run({"jsj", "--manifold", malformed.string()});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, ComputationErrorsExitOne) {
    const auto curve = temp_file("wrong_way.json",
                                 R"({"kind":"closed_form","name":"segment","params":{"a1":0,"b1":1,"a2":-1,"b2":0},
                                     "domain":[0,1]})");
    const CliRun r = run({"reeb-flow", "--curve", curve.string(), "--t0", "0.5"});
    EXPECT_EQ(r.code, 1);
    const CliRun t = run({"lutz-twist", "--curve", cv("alpha_0.json"), "--t0", "0.2", "--t1", "0.4"});
    EXPECT_EQ(t.code, 2) << "a curved window is a shape error";
}

TEST(Cli, ToleranceFromEnvironment) {
    ::setenv("REEB_TOOLKIT_TOL", "1e-30", 1);
    const CliRun strict = run({"catmap-verify", "--n", "2"});
    ::setenv("REEB_TOOLKIT_TOL", "banana", 1);
    const CliRun bad = run({"catmap-verify", "--n", "2"});
    ::unsetenv("REEB_TOOLKIT_TOL");
    EXPECT_EQ(strict.code, 1);
    EXPECT_FALSE(json::parse(strict.out)["passed"].get<bool>());
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("REEB_TOOLKIT_TOL"), std::string::npos);
}

TEST(Cli, ExecutableMatchesInProcessReport) {
    const std::string cmd = std::string(REEBTK_PATH) + " decide-bott --manifold " + fx("cat_torus.json") +
                            " --euler 0 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string out;
    std::array<char, 256> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) {
        out += buf.data();
    }
    const int status = ::pclose(pipe);
    EXPECT_EQ(WEXITSTATUS(status), 0);
    EXPECT_EQ(out, run({"decide-bott", "--manifold", fx("cat_torus.json"), "--euler", "0"}).out);

    const std::string bad = std::string(REEBTK_PATH) + " frobnicate >/dev/null 2>&1";
    EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), 2);
}

}  // namespace
}  // namespace reeb::test
