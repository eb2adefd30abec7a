#include "pbw/cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

std::string sample(const std::string& name) {
    return std::string(PBW_SAMPLES_DIR) + "/" + name;
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
    json report;  // parsed when the run produced JSON
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = pbw::run(args, out, err);
    RunResult r{code, out.str(), err.str(), json()};
    if (!r.out.empty() && r.out[0] == '{') r.report = json::parse(r.out);
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

}  // namespace

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli({}).exit_code == 1);
    CHECK(run_cli({"frobnicate"}).exit_code == 1);
    CHECK(run_cli({"gb"}).exit_code == 1);  // missing file argument
    CHECK(run_cli({"gb", sample("weyl_a1.alg"), "--format", "yaml"}).exit_code == 1);
}

TEST_CASE("missing and malformed files exit 1 with a message") {
    RunResult r = run_cli({"gb", "/nonexistent/nope.alg"});
    CHECK(r.exit_code == 1);
    CHECK(!r.err.empty());

    const std::string bad = write_temp("pbw_bad.alg", "generators: x1\nrelations:\n  x1 +\n");
    RunResult p = run_cli({"gb", bad});
    CHECK(p.exit_code == 1);
    CHECK(p.err.find("line") != std::string::npos);
}

TEST_CASE("gb: complete basis exits 0, truncation exits 3") {
    RunResult ok = run_cli({"gb", sample("weyl_a1.alg"), "--quiet"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.report["command"] == "gb");
    CHECK(ok.report["gb"]["status"] == "complete");
    CHECK(ok.report["gb"]["size"] == 1);
    CHECK(ok.report["version"] == "0.1.0");

    RunResult cut = run_cli({"gb", sample("badpair.alg"), "--degree-bound", "2", "--quiet"});
    CHECK(cut.exit_code == 3);
    CHECK(cut.report["gb"]["status"] == "truncated");
}

TEST_CASE("reports are deterministic and carry the input digest") {
    RunResult a = run_cli({"nakayama", sample("quantum_plane.alg"), "--quiet"});
    RunResult b = run_cli({"nakayama", sample("quantum_plane.alg"), "--quiet"});
    CHECK(a.out == b.out);
    REQUIRE(a.report["input_sha"].is_array());
    CHECK(a.report["input_sha"][0].get<std::string>().size() == 64);
    CHECK(!a.report.contains("timing_ms"));  // suppressed by --quiet
    RunResult timed = run_cli({"nakayama", sample("quantum_plane.alg")});
    CHECK(timed.report.contains("timing_ms"));
}

TEST_CASE("nakayama: quantum plane solution in exact strings") {
    RunResult r = run_cli({"nakayama", sample("quantum_plane.alg"), "--quiet"});
    REQUIRE(r.exit_code == 0);
    const auto& lift = r.report["lift"];
    CHECK(lift["method"] == "polynomial_system");
    CHECK(lift["status"] == "ok");
    REQUIRE(lift["solutions"].size() == 1);
    const auto& sol = lift["solutions"][0];
    CHECK(sol["shift"] == json::array({"-5", "3/2"}));
    CHECK(sol["matrix"][0] == json::array({"2", "0"}));
    CHECK(sol["matrix"][1] == json::array({"0", "1/2"}));
    CHECK(sol["calabi_yau"] == false);
    CHECK(r.report["jordan"]["all_rational"] == true);
    CHECK(r.report["debug"].contains("residual_system"));
}

TEST_CASE("nakayama: missing matrix block is an input error") {
    RunResult r = run_cli({"nakayama", sample("badpair.alg")});
    CHECK(r.exit_code == 1);
    CHECK(!r.err.empty());
}

TEST_CASE("check-pbw: verified and refuted pairs") {
    RunResult good = run_cli({"check-pbw", sample("downup_1_2_graded.alg"),
                              sample("downup_1_2_1.alg"), "--quiet"});
    CHECK(good.exit_code == 0);
    CHECK(good.report["pbw"]["verdict"] == "verified");
    CHECK(good.report["pbw"]["per_degree_dims"]["graded"] ==
          good.report["pbw"]["per_degree_dims"]["filtered"]);
    REQUIRE(good.report["input_sha"].size() == 2);

    RunResult bad = run_cli({"check-pbw", sample("nilpair.alg"), sample("badpair.alg"), "--quiet"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.report["pbw"]["verdict"] == "refuted");
}

TEST_CASE("check-pbw: mismatched generator counts are rejected") {
    RunResult r = run_cli({"check-pbw", sample("weyl_a2.alg"), sample("weyl_a1.alg")});
    CHECK(r.exit_code == 1);
}

TEST_CASE("check-pbw: different ideals with matching dimensions are refuted") {
    // same leading words and quotient dimensions, but the top parts present a
    // different ideal than the graded file
    const std::string graded = write_temp("pbw_g.alg",
                                          "generators: x1, x2\nrelations:\n  x2*x1\n");
    const std::string filtered = write_temp("pbw_f.alg",
                                            "generators: x1, x2\nrelations:\n  x2*x1 - x1*x2 - 1\n");
    RunResult r = run_cli({"check-pbw", graded, filtered, "--quiet"});
    CHECK(r.exit_code == 2);
    CHECK(r.report["pbw"]["verdict"] == "refuted");
}

TEST_CASE("homogenize emits a file that parses and specializes back") {
    RunResult r = run_cli({"homogenize", sample("quantum_plane.alg"), "--quiet"});
    REQUIRE(r.exit_code == 0);
    const std::string rendered = r.report["output"].get<std::string>();
    const std::string path = write_temp("pbw_h.alg", rendered);
    // t -> 0 specialization of the homogenization against the graded top part
    const std::string graded = write_temp("pbw_qp_graded.alg",
                                          "generators: x1, x2\nrelations:\n  x1*x2 - 2*x2*x1\n");
    RunResult back = run_cli({"check-pbw", graded, sample("quantum_plane.alg"), "--quiet"});
    CHECK(back.exit_code == 0);
    CHECK(back.report["pbw"]["verdict"] == "verified");
    // the homogenized file itself has a complete basis
    RunResult gb = run_cli({"gb", path, "--quiet"});
    CHECK(gb.exit_code == 0);
}

TEST_CASE("skew-ext output feeds straight back into nakayama as calabi-yau") {
    RunResult r = run_cli({"skew-ext", sample("downup_1_2_1.alg"), "--quiet"});
    REQUIRE(r.exit_code == 0);
    const std::string path = write_temp("pbw_ext.alg", r.report["output"].get<std::string>());
    RunResult lift = run_cli({"nakayama", path, "--quiet"});
    REQUIRE(lift.exit_code == 0);
    REQUIRE(lift.report["lift"]["solutions"].size() == 1);
    CHECK(lift.report["lift"]["solutions"][0]["calabi_yau"] == true);
}

TEST_CASE("classify-hopf: conclusions and exit codes") {
    RunResult qp = run_cli({"classify-hopf", sample("quantum_plane.alg"), "--quiet"});
    CHECK(qp.exit_code == 0);
    CHECK(qp.report["hopf"]["case"] == "diagonal_1");
    std::vector<std::string> tags = qp.report["hopf"]["conclusions"].get<std::vector<std::string>>();
    CHECK(std::find(tags.begin(), tags.end(), "cyclic_group_algebra_kZm") != tags.end());

    RunResult bare = run_cli({"classify-hopf", sample("u1.alg"), "--quiet"});
    CHECK(bare.exit_code == 3);
    CHECK(bare.report["hopf"]["conclusions"].empty());

    RunResult flagged = run_cli({"classify-hopf", sample("u1.alg"), "--assume-semisimple",
                                 "--assume-trivial-hdet", "--quiet"});
    CHECK(flagged.exit_code == 0);
    CHECK(flagged.report["hopf"]["case"] == "nondiagonal_lambda");
    CHECK(flagged.report["hopf"]["assumptions"]["assume_semisimple"] == true);
    CHECK(flagged.report["hopf"]["assumptions"]["assume_trivial_hdet"] == true);

    RunResult u2 = run_cli({"classify-hopf", sample("u2.alg"), "--quiet"});
    CHECK(u2.exit_code == 0);
    CHECK(u2.report["hopf"]["case"] == "nondiagonal_unipotent");
    std::vector<std::string> t2 = u2.report["hopf"]["conclusions"].get<std::vector<std::string>>();
    CHECK(t2 == std::vector<std::string>{"trivial_k"});
}

TEST_CASE("text format prints conclusions only") {
    RunResult r = run_cli({"nakayama", sample("weyl_a1.alg"), "--format", "text", "--quiet"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("calabi_yau: yes") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);
}
