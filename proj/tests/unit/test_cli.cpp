#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "treeline/cli.hpp"

using namespace treeline;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const Config& config) {
    std::ostringstream out, err;
    int code = run_command(config, out, err);
    return {code, out.str(), err.str()};
}

Config expectations_of(const std::string& heads) {
    Config config;
    config.command = Config::Command::expectations;
    config.heads_inline = heads;
    return config;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("expectations output is byte-stable") {
    RunResult r = run(expectations_of("2 0 2"));
    CHECK(r.code == kExitOk);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "n: 3\n"
          "root: 2\n"
          "count_unconstrained: 6\n"
          "count_planar: 6\n"
          "count_projective: 6\n"
          "planar_projective_ratio: 1 (1.000000)\n"
          "expected_D_unconstrained: 8/3 (2.666667)\n"
          "expected_D_planar: 8/3 (2.666667)\n"
          "expected_D_projective: 8/3 (2.666667)\n"
          "expected_D_projective_root_fixed: 3 (3.000000)\n"
          "expected_D_crossing: undefined (every arrangement is planar)\n");
}

TEST_CASE("expectations on a tree with crossings defines every line") {
    RunResult r = run(expectations_of("2 3 4 0"));  // path on 4
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("expected_D_planar: 19/4 (4.750000)\n") != std::string::npos);
    CHECK(r.out.find("expected_D_crossing: 11/2 (5.500000)\n") != std::string::npos);
    CHECK(r.out.find("count_planar: 16\n") != std::string::npos);
}

TEST_CASE("expectations accepts an edge-list file with an optional root") {
    std::filesystem::path tmp =
        std::filesystem::temp_directory_path() / "treeline_cli_tree.txt";
    std::ofstream(tmp) << "3\n1 2\n2 3\n";
    Config config;
    config.command = Config::Command::expectations;
    config.tree_path = tmp.string();
    RunResult r = run(config);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("root: 1\n") != std::string::npos);

    config.root_1based = 2;
    RunResult r2 = run(config);
    CHECK(r2.code == kExitOk);
    CHECK(r2.out.find("root: 2\n") != std::string::npos);
    CHECK(r2.out.find("count_projective: 6\n") != std::string::npos);

    config.root_1based = 7;
    RunResult r3 = run(config);
    CHECK(r3.code == kExitInputError);
    CHECK(r3.err.find("root_out_of_range") != std::string::npos);
    std::filesystem::remove(tmp);
}

TEST_CASE("input validation failures exit with code 1 and a kind-tagged message") {
    Config both = expectations_of("2 0 2");
    both.tree_path = "also.txt";
    RunResult r = run(both);
    CHECK(r.code == kExitInputError);
    CHECK(r.err.find("error (invalid_argument)") != std::string::npos);
    CHECK(r.out.empty());

    Config neither;
    neither.command = Config::Command::expectations;
    CHECK(run(neither).code == kExitInputError);

    Config heads_plus_root = expectations_of("2 0 2");
    heads_plus_root.root_1based = 1;
    CHECK(run(heads_plus_root).code == kExitInputError);

    Config missing;
    missing.command = Config::Command::expectations;
    missing.tree_path = "/nonexistent/tree.txt";
    RunResult miss = run(missing);
    CHECK(miss.code == kExitInputError);
    CHECK(miss.err.find("io_error") != std::string::npos);

    RunResult cyc = run(expectations_of("2 3 2 0"));
    CHECK(cyc.code == kExitInputError);
    CHECK(cyc.err.find("cycle") != std::string::npos);
}

TEST_CASE("sample emits frozen arrangements per seed") {
    Config config;
    config.command = Config::Command::sample;
    config.heads_inline = "2 0 2 2";
    config.constraint = Constraint::projective;
    config.seed = 42;
    config.sample_count = 3;
    RunResult r = run(config);
    CHECK(r.code == kExitOk);
    CHECK(r.out == "1 4 2 3\n4 2 1 3\n1 3 4 2\n");
}

TEST_CASE("sample validates its knobs") {
    Config config;
    config.command = Config::Command::sample;
    config.heads_inline = "2 0 2";

    RunResult unseeded = run(config);
    CHECK(unseeded.code == kExitInputError);
    CHECK(unseeded.err.find("--seed") != std::string::npos);

    config.seed = 5;
    config.sample_count = -2;
    CHECK(run(config).code == kExitInputError);

    config.sample_count = 0;  // zero samples is a valid no-op
    RunResult empty = run(config);
    CHECK(empty.code == kExitOk);
    CHECK(empty.out.empty());

    config.sample_count = 1;
    config.gildea_temperley = true;  // needs the projective constraint
    config.constraint = Constraint::planar;
    CHECK(run(config).code == kExitInputError);
    config.constraint = Constraint::projective;
    CHECK(run(config).code == kExitOk);
}

TEST_CASE("verify runs a small sweep and honors the fault hook") {
    Config config;
    config.command = Config::Command::verify;
    config.max_n = 3;
    RunResult r = run(config);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("verification passed") != std::string::npos);

    config.inject_fault = true;
    RunResult fault = run(config);
    CHECK(fault.code == kExitVerificationFailure);
    CHECK(fault.out.find("verification FAILED") != std::string::npos);
    CHECK(fault.out.find("deliberate failure") != std::string::npos);

    config.inject_fault = false;
    config.max_n = 0;
    CHECK(run(config).code == kExitInputError);
    config.max_n = 13;
    CHECK(run(config).code == kExitInputError);
}

TEST_CASE("analyze writes coverage, metrics, and aggregate files") {
    std::filesystem::path out_dir =
        std::filesystem::temp_directory_path() / "treeline_cli_analyze";
    std::filesystem::remove_all(out_dir);

    Config config;
    config.command = Config::Command::analyze;
    config.inputs = {std::string(FIXTURE_DATA_DIR) + "/classes.conllu",
                     std::string(FIXTURE_DATA_DIR) + "/shift_pair.conllu"};
    config.out_dir = out_dir.string();
    RunResult r = run(config);
    CHECK(r.code == kExitOk);
    CHECK(r.err.empty());  // the example files are fully well-formed
    CHECK(r.out ==
          "lang=classes sentences_seen=3 kept=3 baseline_order_held=3/3\n"
          "lang=shift_pair sentences_seen=2 kept=2 baseline_order_held=2/2\n");

    CHECK(slurp(out_dir / "coverage.csv") ==
          "lang,pct_projective,pct_planar\n"
          "classes,33.333333,66.666667\n"
          "shift_pair,100.000000,100.000000\n");

    std::string metrics = slurp(out_dir / "classes_metrics.csv");
    CHECK(metrics.find("classes,classes-1,4,4,0,true,true,") != std::string::npos);
    CHECK(metrics.find("classes,classes-2,5,6,0,true,false,") != std::string::npos);
    CHECK(metrics.find("classes,classes-3,8,13,1,false,false,") != std::string::npos);

    std::string aggregate = slurp(out_dir / "shift_pair_aggregate.csv");
    CHECK(aggregate.find("lang,n,count,constraint,mean_d,expected_mean_d\n") == 0);
    CHECK(aggregate.find("shift_pair,9,1,none,2.250000,") != std::string::npos);

    std::filesystem::remove_all(out_dir);
}

TEST_CASE("analyze reports parse diagnostics on the error stream") {
    std::filesystem::path out_dir =
        std::filesystem::temp_directory_path() / "treeline_cli_analyze_diag";
    std::filesystem::remove_all(out_dir);

    Config config;
    config.command = Config::Command::analyze;
    config.inputs = {std::string(TEST_DATA_DIR) + "/mixed.conllu"};
    config.out_dir = out_dir.string();
    RunResult r = run(config);
    CHECK(r.code == kExitOk);
    CHECK(r.err.find("mixed line 11:") != std::string::npos);  // bad head
    CHECK(r.err.find("sentence dropped") != std::string::npos);
    CHECK(r.out.find("lang=mixed sentences_seen=6 kept=3") != std::string::npos);

    config.inputs = {"/nonexistent/dir/nothing.conllu"};
    CHECK(run(config).code == kExitInputError);

    config.inputs.clear();
    CHECK(run(config).code == kExitInputError);

    std::filesystem::remove_all(out_dir);
}
