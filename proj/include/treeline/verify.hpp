#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "treeline/oracle.hpp"
#include "treeline/tree.hpp"

namespace treeline {

// Visit every labeled tree on n vertices exactly once (n^(n-2) of them),
// in lexicographic order of the defining Pruefer sequence.
void for_each_labeled_tree(Vertex n, const std::function<void(const FreeTree&)>& visit);

// Equivalence checks between the closed forms and brute-force enumeration.
// Each check appends human-readable failure notes instead of throwing, so a
// sweep reports every broken case.
struct Checks {
    std::int64_t performed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void expect(bool condition, const std::string& what);
};

std::string describe(const FreeTree& tree);

// Closed-form counts against filtering all n! permutations with the
// crossing and root-cover predicates.  Requires n within the unconstrained
// enumeration limit.
void check_counts_against_permutations(const FreeTree& tree, Checks& out);

// Closed-form counts against segment-wise enumeration, plus the partition
// identity (planar count = sum over vertices of root-pinned projective
// counts) and the planar/projective ratio.
void check_counts_against_segments(const FreeTree& tree, Checks& out);

// Every expectation route against brute means: the three planar routes, the
// projective expectation for every rooting, the root-pinned variant, and
// the per-root-child anchor/coanchor decomposition.
void check_expectations_against_enumeration(const FreeTree& tree, Checks& out);

// Per-edge planar expectations against brute per-edge means, and their sum
// against expected_D_planar.
void check_edge_length_decomposition(const FreeTree& tree, Checks& out);

// Definedness of the crossing-restricted expectation (errors exactly for
// stars and n <= 3), the law-of-total-expectation identity, and, when the
// full permutation set is enumerable, the brute crossing mean.
void check_crossing_expectation(const FreeTree& tree, Checks& out);

// Chi-square uniformity of random_planar over its support and of
// random_projective over every rooting's support, skipping supports larger
// than support_cap.  Also checks every sample lands inside the support.
void check_sampler_uniformity(const FreeTree& tree, std::uint64_t seed,
                              std::int64_t samples_per_cell, std::int64_t support_cap,
                              Checks& out);

// Chi-square uniformity of random_labeled_tree over all n^(n-2) trees.
void check_random_tree_uniformity(Vertex n, std::int64_t samples, std::uint64_t seed,
                                  Checks& out);

struct VerifyOptions {
    Vertex max_n = 6;
    std::uint64_t seed = 0x5eed0001;
    // Self-test of the failure path: adds one deliberately broken comparison
    // so callers can confirm failures reach the exit status.
    bool inject_fault = false;
};

// Full suite: counting, expectations, edge lengths, crossing expectation
// over every labeled tree up to max_n; sampler uniformity over canonical
// families (path, star, and a two-hub tree per size).  Logs one line per
// phase; returns true when every check passed.
bool run_verification(const VerifyOptions& options, std::ostream& log);

}  // namespace treeline
