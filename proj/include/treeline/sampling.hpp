#pragma once

#include "treeline/arrangement.hpp"
#include "treeline/rng.hpp"
#include "treeline/tree.hpp"

namespace treeline {

// All samplers are exactly uniform over their support (the reference sampler
// below is deliberately not) and use iterative traversals, so path trees of
// depth 10^5+ cannot overflow the call stack.  Draw order is part of seed
// mapping version 1 (see rng.hpp) and is documented per sampler in the
// implementation.

// Uniform over all n! arrangements.
Arrangement random_unconstrained(Vertex n, Rng& rng);

// Uniform over the count_projective(tree) projective arrangements: every
// vertex's block of child segments plus the vertex itself is permuted
// uniformly and independently.
Arrangement random_projective(const RootedTree& tree, Rng& rng);

// Uniform over the count_planar(tree) planar arrangements: position 1 is a
// uniform vertex, its neighbor segments are permuted uniformly, and each
// neighbor subtree is filled projectively.
Arrangement random_planar(const FreeTree& tree, Rng& rng);

// Non-uniform reference sampler: each dependent goes left or right of its
// head with probability 1/2, same-side dependents are ordered uniformly.
// Projective by construction but biased within the projective support.
Arrangement random_projective_gildea_temperley(const RootedTree& tree, Rng& rng);

}  // namespace treeline
