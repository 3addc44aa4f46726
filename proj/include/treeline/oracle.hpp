#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "treeline/arrangement.hpp"
#include "treeline/rational.hpp"
#include "treeline/tree.hpp"

namespace treeline {

// Brute-force enumeration, the reference the closed forms and samplers are
// checked against.  Exponential by nature; guarded by explicit limits.

struct EnumerationLimits {
    Vertex max_n_unconstrained = 8;   // n! arrangements
    Vertex max_n_constrained = 12;    // product-of-factorials arrangements
};

struct ArrangementSet {
    FreeTree tree;
    Constraint constraint;
    std::optional<Vertex> root;  // set for projective enumerations
    std::vector<Arrangement> items;  // sorted by position sequence
};

// All n! arrangements, lexicographic by position sequence.
ArrangementSet enumerate_all(const FreeTree& tree, const EnumerationLimits& limits = {});

// All crossing-free arrangements, generated segment-wise (not by filtering).
ArrangementSet enumerate_planar(const FreeTree& tree, const EnumerationLimits& limits = {});

// All projective arrangements of the rooted tree, generated segment-wise.
ArrangementSet enumerate_projective(const RootedTree& tree,
                                    const EnumerationLimits& limits = {});

// Mean D over the set; errors with invalid_argument on an empty set.
Rational brute_expected_D(const ArrangementSet& set);

struct ChiSquareResult {
    double statistic;
    double critical_value;
    int degrees_of_freedom;
    bool pass;  // statistic below the critical value
};

// Tabulated upper critical values, alpha in {0.05, 0.01, 0.001}, df 1..300.
double chi_square_critical_value(int degrees_of_freedom, double alpha);

// Goodness of fit of observed counts against given cell probabilities.
ChiSquareResult chi_square_gof(std::span<const std::int64_t> counts,
                               std::span<const double> probabilities, double alpha = 0.001);

// Uniform special case: every cell expects total / counts.size().
ChiSquareResult chi_square_uniformity(std::span<const std::int64_t> counts, std::int64_t total,
                                      double alpha = 0.001);

}  // namespace treeline
