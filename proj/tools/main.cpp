#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "treeline/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "treeline: counts, exact expectations, and uniform samples of linear arrangements of "
        "trees, plus dependency treebank baselines"};
    app.require_subcommand(1);

    treeline::Config config;
    std::string tree_path;
    std::string heads;
    std::int32_t root = 0;
    std::string constraint = "none";
    std::string sampler = "uniform";
    std::uint64_t seed = 0;

    auto add_tree_options = [&](CLI::App* cmd) {
        cmd->add_option("--tree", tree_path,
                        "edge-list file: first line n, then n-1 lines 'u v' (1-based)");
        cmd->add_option("--heads", heads, "inline head vector: n integers, 0 marks the root");
        cmd->add_option("--root", root, "root vertex id for edge-list input (default 1)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* expectations =
        app.add_subcommand("expectations", "print counts and exact expected D for one tree");
    add_tree_options(expectations);

    CLI::App* sample =
        app.add_subcommand("sample", "print seeded random arrangements, one line per sample");
    add_tree_options(sample);
    sample->add_option("--constraint", constraint, "arrangement family: none|planar|projective")
        ->check(CLI::IsMember({"none", "planar", "projective"}));
    sample->add_option("--seed", seed, "RNG seed (seed mapping version 1)")->required();
    sample->add_option("--count", config.sample_count, "number of samples (default 1)")
        ->check(CLI::NonNegativeNumber);
    sample
        ->add_option("--sampler", sampler,
                     "uniform|gildea-temperley; the latter is the biased reference sampler and "
                     "needs --constraint projective")
        ->check(CLI::IsMember({"uniform", "gildea-temperley"}));

    CLI::App* verify = app.add_subcommand(
        "verify", "run the brute-force equivalence suite; exit 0 iff every check passes");
    verify->add_option("--max-n", config.max_n,
                       "sweep every labeled tree up to this many vertices (1..12, default 6)");
    verify->add_option("--seed", seed, "RNG seed for the uniformity checks");
    verify->add_flag("--self-test-fail", config.inject_fault,
                     "inject one failing check to prove failures reach the exit status");

    CLI::App* analyze =
        app.add_subcommand("analyze", "per-sentence metrics, per-length baselines, and coverage "
                                      "CSVs for CoNLL-U treebanks");
    analyze->add_option("files", config.inputs, "CoNLL-U input files")->required();
    analyze->add_option("--out", config.out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? treeline::kExitOk : treeline::kExitInputError;
    }

    if (app.got_subcommand(expectations)) config.command = treeline::Config::Command::expectations;
    if (app.got_subcommand(sample)) config.command = treeline::Config::Command::sample;
    if (app.got_subcommand(verify)) config.command = treeline::Config::Command::verify;
    if (app.got_subcommand(analyze)) config.command = treeline::Config::Command::analyze;

    CLI::App* tree_cmd = app.got_subcommand(expectations) ? expectations : sample;
    if (tree_cmd->count("--tree") > 0) config.tree_path = tree_path;
    if (tree_cmd->count("--heads") > 0) config.heads_inline = heads;
    if (tree_cmd->count("--root") > 0) config.root_1based = root;

    if (constraint == "none") config.constraint = treeline::Constraint::none;
    if (constraint == "planar") config.constraint = treeline::Constraint::planar;
    if (constraint == "projective") config.constraint = treeline::Constraint::projective;
    config.gildea_temperley = sampler == "gildea-temperley";
    if (sample->count("--seed") > 0 || verify->count("--seed") > 0) config.seed = seed;

    return treeline::run_command(config, std::cout, std::cerr);
}
