#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treeline/arrangement.hpp"

namespace treeline {

// Parsed command line for every subcommand; the runner picks the fields it
// needs.  Building it from argv lives in the binary; tests fill it directly.
struct Config {
    enum class Command { expectations, sample, verify, analyze };

    Command command = Command::expectations;

    // Tree input: exactly one of these for expectations/sample.
    std::optional<std::string> tree_path;          // edge-list file
    std::optional<std::string> heads_inline;       // head vector, e.g. "2 0 2"
    std::optional<std::int32_t> root_1based;       // for edge-list input

    Constraint constraint = Constraint::none;
    bool gildea_temperley = false;                 // sample: reference sampler
    std::optional<std::uint64_t> seed;             // required by sample
    std::int64_t sample_count = 1;

    std::int32_t max_n = 6;                        // verify sweep bound
    bool inject_fault = false;                     // verify self-test hook

    std::vector<std::string> inputs;               // analyze: conllu paths
    std::string out_dir;                           // analyze: output directory
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailure = 2;

// Executes the command, writing results to out and problems to err.
// Returns one of the exit codes above; never throws.
int run_command(const Config& config, std::ostream& out, std::ostream& err);

}  // namespace treeline
