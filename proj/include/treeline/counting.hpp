#pragma once

#include "treeline/rational.hpp"
#include "treeline/tree.hpp"

namespace treeline {

// n! arrangements with no constraint.
BigCount count_unconstrained(Vertex n);

// Product over vertices of (out_degree + 1)!.
BigCount count_projective(const RootedTree& tree);

// n times the product over vertices of degree!.
BigCount count_planar(const FreeTree& tree);

// count_planar / count_projective = n / (deg(root) + 1); always >= 1, with
// equality exactly when the tree is a star rooted at its hub.
Rational planar_projective_ratio(const RootedTree& tree);

// Probability that a uniformly random arrangement has no crossings.
Rational prob_planar(const FreeTree& tree);
Rational prob_crossing(const FreeTree& tree);

}  // namespace treeline
