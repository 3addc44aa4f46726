#pragma once

#include <vector>

#include "treeline/rational.hpp"
#include "treeline/tree.hpp"

namespace treeline {

// Exact expected values of D, the sum of edge lengths, under each
// arrangement family.  Everything returns canonical rationals.

// (n^2 - 1) / 3.
Rational expected_D_unconstrained(Vertex n);

// Uniform projective arrangements of a rooted tree, O(n):
// (sum over u of subtree_size(u) * (2 * out_degree(u) + 1) - 1) / 6.
Rational expected_D_projective(const RootedTree& tree);

// Uniform projective arrangements with the root pinned to position 1:
// expected_D_projective plus half the sum of the root children's coanchor
// expectations.
Rational expected_D_projective_root_fixed(const RootedTree& tree);

// Per-edge terms for an edge from the root to child v, over uniform
// projective arrangements.  The edge length decomposes as
// 1 + anchor + coanchor; the anchor part spans v's own segment, the
// coanchor part counts the intervening siblings' segments.
Rational expected_anchor(const RootedTree& tree, Vertex child);             // (s(v) + 1) / 2
Rational expected_coanchor(const RootedTree& tree, Vertex child);           // (n - s(v) - 1) / 3
Rational expected_coanchor_root_fixed(const RootedTree& tree, Vertex child);  // 3/2 of the above

// Uniform planar arrangements of a free tree.
// O(n) closed form over directional sizes.
Rational expected_D_planar(const FreeTree& tree);
// Average of the root-fixed projective expectation over all rootings,
// O(n^2); the reference implementation the fast form must match.
Rational expected_D_planar_naive(const FreeTree& tree);
// Third route: (n-1)(n-2)/(6n) plus the average projective expectation over
// all rootings, using the edge-difference propagation below.  O(n).
Rational expected_D_planar_by_root_average(const FreeTree& tree);

// expected_D_projective for every rooting in O(n) total: the value is
// computed once and propagated across each edge by a constant-time
// difference.
std::vector<Rational> expected_D_projective_all_roots(const FreeTree& tree);

// Expected length of one edge over uniform planar arrangements, O(deg(u) +
// deg(v)) given the directional sizes.  Summing over the edges gives
// expected_D_planar.
Rational expected_edge_length_planar(const FreeTree& tree, const DirectionalSizes& sizes,
                                     Vertex u, Vertex v);

// Expected D over arrangements with at least one crossing, by the law of
// total expectation.  Errors with undefined_value when every arrangement is
// planar (stars, and every tree with n <= 3).
Rational expected_D_crossing(const FreeTree& tree);

}  // namespace treeline
