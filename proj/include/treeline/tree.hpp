#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "treeline/rng.hpp"

namespace treeline {

using Vertex = std::int32_t;

// Undirected free tree on vertices 0..n-1 in compressed adjacency form.
// Neighbor order per vertex follows the order of the defining edge list.
// Each directed edge (u, v) occupies one adjacency slot; twin(slot) is the
// slot of (v, u), so per-edge annotations can be stored in flat arrays.
class FreeTree {
public:
    // edges are 0-based and assumed valid (n-1 of them, forming a tree);
    // use from_edge_list for untrusted input.
    FreeTree(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);

    Vertex vertex_count() const { return n_; }

    std::span<const Vertex> neighbors(Vertex u) const {
        return {adjacency_.data() + offset_[u], adjacency_.data() + offset_[u + 1]};
    }
    Vertex degree(Vertex u) const { return offset_[u + 1] - offset_[u]; }

    std::int64_t slot_begin(Vertex u) const { return offset_[u]; }
    std::int64_t slot_end(Vertex u) const { return offset_[u + 1]; }
    Vertex slot_target(std::int64_t slot) const { return adjacency_[slot]; }
    std::int64_t twin(std::int64_t slot) const { return twin_[slot]; }

    // Edges in defining order, endpoints as given.
    std::span<const std::pair<Vertex, Vertex>> edges() const { return edges_; }

private:
    Vertex n_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::int64_t> offset_;
    std::vector<Vertex> adjacency_;
    std::vector<std::int64_t> twin_;
};

// Validating constructor for 1-based input.  Error kinds, in the order the
// conditions are checked: id_out_of_range; cycle (self-loop or repeated
// edge); wrong_edge_count (more than n-1 edges); disconnected.  Fewer than
// n-1 simple edges always leaves some vertex unreachable, so an undercount
// reports disconnected.
FreeTree from_edge_list(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges_1based);

// Free tree plus a distinguished root: parents, children (in adjacency
// order), subtree sizes, all precomputed.  Immutable after construction.
class RootedTree {
public:
    RootedTree(FreeTree tree, Vertex root);

    const FreeTree& tree() const { return tree_; }
    Vertex vertex_count() const { return tree_.vertex_count(); }
    Vertex root() const { return root_; }

    Vertex parent(Vertex u) const { return parent_[u]; }  // -1 for the root
    std::span<const Vertex> children(Vertex u) const {
        return {child_flat_.data() + child_offset_[u], child_flat_.data() + child_offset_[u + 1]};
    }
    Vertex out_degree(Vertex u) const { return child_offset_[u + 1] - child_offset_[u]; }
    Vertex subtree_size(Vertex u) const { return subtree_size_[u]; }

    // Vertices in a root-first order where every parent precedes its children.
    std::span<const Vertex> preorder() const { return preorder_; }

private:
    FreeTree tree_;
    Vertex root_;
    std::vector<Vertex> parent_;
    std::vector<std::int64_t> child_offset_;
    std::vector<Vertex> child_flat_;
    std::vector<Vertex> subtree_size_;
    std::vector<Vertex> preorder_;
};

// root is 0-based; errors with root_out_of_range.
RootedTree root_at(const FreeTree& tree, Vertex root);

// s_u(v) for every directed edge (u, v): the size of the component of v
// after removing the edge.  Stored per adjacency slot; computed with one
// depth-first pass plus a propagation pass, O(n) total.
class DirectionalSizes {
public:
    explicit DirectionalSizes(const FreeTree& tree);

    // Size toward the neighbor stored in the given adjacency slot of u.
    Vertex toward_slot(std::int64_t slot) const { return toward_[slot]; }

    // s_u(v); v must be adjacent to u (errors with not_an_edge).
    // Linear scan over u's neighbors; algorithms on the hot path iterate
    // slots directly instead.
    Vertex toward(const FreeTree& tree, Vertex u, Vertex v) const;

private:
    std::vector<Vertex> toward_;
};

DirectionalSizes compute_directional_sizes(const FreeTree& tree);

// Decode a Pruefer sequence (entries in 0..n-1, length n-2) into its tree.
FreeTree from_pruefer(Vertex n, std::span<const Vertex> sequence);

// Uniform over the n^(n-2) labeled trees, via a uniform Pruefer sequence.
FreeTree random_labeled_tree(Vertex n, Rng& rng);

// Text formats (1-based at the boundary).
// Edge list: first line n, then n-1 lines "u v".
FreeTree read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const FreeTree& tree);

// Head vector: one line of n integers, head of vertex i at column i, 0 marks
// the root.  Exactly one zero required.
RootedTree read_head_vector(std::istream& in);
std::vector<Vertex> head_vector(const RootedTree& tree);  // 1-based heads, 0 at root

}  // namespace treeline
