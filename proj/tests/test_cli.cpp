#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using namespace matlin::cli;

namespace {

const std::string data_dir = MATLIN_DATA_DIR;
const std::string golden_dir = MATLIN_GOLDEN_DIR;

struct Outcome {
    int code;
    std::string out, err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome invoke(std::vector<std::string> args, const char* env_jobs = nullptr) {
    std::ostringstream out, err;
    const int code = run(args, out, err, env_jobs);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string scratch(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("matlin_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

void check_error(const Outcome& o, int code, const std::string& kind) {
    CHECK(o.code == code);
    const auto j = o.json();
    CHECK(j["error"]["kind"] == kind);
    CHECK(j["error"]["exit_code"] == code);
    CHECK(!o.err.empty());
}

}  // namespace

TEST_CASE("reports match the golden files") {
    const Outcome analyze = invoke({"analyze", "--matrix", data_dir + "/A.json", "--format", "json"});
    CHECK(analyze.code == exit_ok);
    CHECK(analyze.out == slurp(golden_dir + "/analyze_A.json"));

    const Outcome tutte = invoke({"tutte", "--bases", data_dir + "/U24_bases.json", "--format", "json"});
    CHECK(tutte.code == exit_ok);
    CHECK(tutte.out == slurp(golden_dir + "/tutte_U24.json"));

    const Outcome self = invoke({"selftest", "--format", "json"});
    CHECK(self.code == exit_ok);
    CHECK(self.out == slurp(golden_dir + "/selftest.json"));
}

TEST_CASE("analyze reports the example matroid") {
    const auto j = invoke({"analyze", "--matrix", data_dir + "/A.json", "--format", "json"}).json();
    CHECK(j["command"] == "analyze");
    CHECK(j["input_sha256"].get<std::string>().size() == 64);
    CHECK(j["n"] == 6);
    CHECK(j["rank"] == 3);
    CHECK(!j.contains("jobs"));
}

TEST_CASE("equivalent inputs hash the same") {
    const std::string spaced = scratch("spaced.json", "{ \"matrix\" : [[1,1,0,0,0,1],[0,1,-1,0,1,0],[0,0,1,1,0,0]] }");
    const auto a = invoke({"analyze", "--matrix", data_dir + "/A.json", "--format", "json"}).json();
    const auto b = invoke({"analyze", "--matrix", spaced, "--format", "json"}).json();
    CHECK(a["input_sha256"] == b["input_sha256"]);
    const auto c = invoke({"analyze", "--matrix", data_dir + "/A_affine_101.json", "--format", "json"}).json();
    CHECK(a["input_sha256"] != c["input_sha256"]);
}

TEST_CASE("output does not depend on the worker count") {
    const std::vector<std::string> args{"initial-ideals", "--matrix", data_dir + "/A.json", "--format", "json"};
    const Outcome one = invoke({args.begin(), args.end()}, "1");
    REQUIRE(one.code == exit_ok);
    CHECK(one.json()["count"] == 72);
    for (const char* jobs : {"2", "8"}) CHECK(invoke(args, jobs).out == one.out);
    std::vector<std::string> with_flag = args;
    with_flag.insert(with_flag.end(), {"--jobs", "3"});
    CHECK(invoke(with_flag).out == one.out);
    CHECK(invoke(with_flag, "2").out == one.out);
}

TEST_CASE("commands on the affine example") {
    const Outcome ideal = invoke({"ideal", "--matrix", data_dir + "/A_affine_101.json", "--format", "json"});
    REQUIRE(ideal.code == exit_ok);
    const auto counts =
        invoke({"affine", "--matrix", data_dir + "/A.json", "--b", "1,0,1", "--count", "--format", "json"}).json();
    CHECK(counts.dump().find("124") != std::string::npos);
    CHECK(counts.dump().find("144") != std::string::npos);

    const Outcome betti = invoke({"betti", "--matrix", data_dir + "/A_affine_101.json", "--format", "json"});
    CHECK(betti.code != exit_ok);
}

TEST_CASE("text output") {
    const Outcome o = invoke({"tutte", "--matrix", data_dir + "/A.json"});
    CHECK(o.code == exit_ok);
    CHECK(o.out.find("command: tutte") != std::string::npos);
}

TEST_CASE("error exits") {
    check_error(invoke({"analyze", "--matrix", "/nonexistent/file.json", "--format", "json"}), exit_usage, "InputError");
    CHECK(invoke({"--format", "json"}).code == exit_usage);
    CHECK(invoke({"analyze", "--bogus"}).code == exit_usage);
    CHECK(invoke({"analyze", "--matrix", data_dir + "/A.json", "--bases", data_dir + "/U24_bases.json"}).code ==
          exit_usage);

    const std::string bad_bases = scratch("bad_bases.json", R"({"n": 4, "bases": [[1,2],[3,4]]})");
    const Outcome axiom = invoke({"analyze", "--bases", bad_bases, "--format", "json"});
    check_error(axiom, exit_axiom, "AxiomViolation");

    const std::string deficient = scratch("deficient.json", R"({"matrix": [[1,1],[2,2]]})");
    CHECK(invoke({"ideal", "--matrix", deficient, "--format", "json"}).code == exit_invalid_input);
    const std::string inconsistent = scratch("inconsistent.json", R"({"matrix": [[1,1],[2,2]], "b": [1,3]})");
    CHECK(invoke({"affine", "--matrix", inconsistent, "--format", "json"}).code == exit_invalid_input);

    const std::string wide = scratch("wide.json", R"({"matrix": [[1,2,3,4,5,6,7,8,9,10]]})");
    check_error(invoke({"initial-ideals", "--matrix", wide, "--count", "--format", "json"}), exit_cutoff,
                "CutoffExceeded");
    CHECK(invoke({"ideal", "--matrix", data_dir + "/A.json", "--order", "1,1,2", "--format", "json"}).code ==
          exit_usage);
    CHECK(invoke({"--help"}).code == exit_ok);
}

TEST_CASE("report can be written to a file") {
    const auto path = std::filesystem::temp_directory_path() / "matlin_test_out.json";
    const Outcome o = invoke({"analyze", "--matrix", data_dir + "/A.json", "--format", "json", "--out", path.string()});
    CHECK(o.code == exit_ok);
    CHECK(slurp(path.string()) == slurp(golden_dir + "/analyze_A.json"));
}

TEST_CASE("selftest passes and is stable") {
    const SelftestResult a = selftest(1);
    const SelftestResult b = selftest(4);
    CHECK(a.passed);
    CHECK(a.report == b.report);
}
