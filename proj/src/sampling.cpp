#include "treeline/sampling.hpp"

#include <vector>

namespace treeline {

Arrangement random_unconstrained(Vertex n, Rng& rng) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(std::span<Vertex>(order));
    return Arrangement::from_vertex_order(std::move(order));
}

namespace {

struct Block {
    Vertex vertex;
    Vertex start;  // first position of this subtree's segment
};

}  // namespace

// Draw order: one shuffle of [u, children(u)...] per vertex, vertices in
// depth-first order, a vertex's segments visited left to right.  Segment
// start positions depend only on subtree sizes, so they are assigned on the
// way down.
Arrangement random_projective(const RootedTree& tree, Rng& rng) {
    Vertex n = tree.vertex_count();
    std::vector<Vertex> position(static_cast<std::size_t>(n));
    std::vector<Block> stack{{tree.root(), 0}};
    stack.reserve(static_cast<std::size_t>(n));
    std::vector<Vertex> segment;
    std::vector<Block> pending;
    while (!stack.empty()) {
        auto [u, start] = stack.back();
        stack.pop_back();

        segment.clear();
        segment.push_back(u);
        for (Vertex c : tree.children(u)) segment.push_back(c);
        rng.shuffle(std::span<Vertex>(segment));

        pending.clear();
        Vertex cursor = start;
        for (Vertex item : segment) {
            if (item == u) {
                position[u] = cursor;
                cursor += 1;
            } else {
                pending.push_back({item, cursor});
                cursor += tree.subtree_size(item);
            }
        }
        // Reversed push so the leftmost segment is expanded first.
        for (auto it = pending.rbegin(); it != pending.rend(); ++it) stack.push_back(*it);
    }
    return Arrangement::from_positions(std::move(position));
}

namespace {

// Projective fill of the subtree hanging from child off its parent, for a
// tree with no materialized rooting.  Subtree sizes come from the
// directional-size table, child lists from skipping the parent.
Arrangement planar_fill(const FreeTree& tree, const DirectionalSizes& sizes, Vertex top,
                        Rng& rng) {
    Vertex n = tree.vertex_count();
    std::vector<Vertex> position(static_cast<std::size_t>(n));
    position[top] = 0;

    struct Frame {
        Vertex vertex;
        Vertex parent;
        Vertex start;
        bool place_self;  // top's own position is fixed already
    };
    std::vector<Frame> stack{{top, -1, 1, false}};
    std::vector<Vertex> segment;
    std::vector<Vertex> segment_size;
    std::vector<Frame> pending;
    while (!stack.empty()) {
        auto [u, parent, start, place_self] = stack.back();
        stack.pop_back();

        segment.clear();
        segment_size.clear();
        if (place_self) {
            segment.push_back(u);
            segment_size.push_back(1);
        }
        for (std::int64_t slot = tree.slot_begin(u); slot < tree.slot_end(u); ++slot) {
            Vertex v = tree.slot_target(slot);
            if (v == parent) continue;
            segment.push_back(v);
            segment_size.push_back(sizes.toward_slot(slot));
        }
        // One shuffle per vertex; sizes follow their segments.
        for (std::size_t i = segment.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(rng.uniform_below(i));
            std::swap(segment[i - 1], segment[j]);
            std::swap(segment_size[i - 1], segment_size[j]);
        }

        pending.clear();
        Vertex cursor = start;
        for (std::size_t i = 0; i < segment.size(); ++i) {
            if (place_self && segment[i] == u) {
                position[u] = cursor;
                cursor += 1;
            } else {
                pending.push_back({segment[i], u, cursor, true});
                cursor += segment_size[i];
            }
        }
        for (auto it = pending.rbegin(); it != pending.rend(); ++it) stack.push_back(*it);
    }
    return Arrangement::from_positions(std::move(position));
}

}  // namespace

// Draw order: the position-1 vertex, then shuffles exactly as in
// random_projective for the tree rooted there.
Arrangement random_planar(const FreeTree& tree, Rng& rng) {
    Vertex n = tree.vertex_count();
    Vertex top = static_cast<Vertex>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    DirectionalSizes sizes = compute_directional_sizes(tree);
    return planar_fill(tree, sizes, top, rng);
}

// Draw order per vertex, depth-first, segments left to right afterwards:
// one side bit per child in child order (0 = left), then a shuffle of the
// left group, then a shuffle of the right group.
Arrangement random_projective_gildea_temperley(const RootedTree& tree, Rng& rng) {
    Vertex n = tree.vertex_count();
    std::vector<Vertex> position(static_cast<std::size_t>(n));
    std::vector<Block> stack{{tree.root(), 0}};
    std::vector<Vertex> left, right;
    std::vector<Block> pending;
    while (!stack.empty()) {
        auto [u, start] = stack.back();
        stack.pop_back();

        left.clear();
        right.clear();
        for (Vertex c : tree.children(u)) {
            if (rng.uniform_below(2) == 0)
                left.push_back(c);
            else
                right.push_back(c);
        }
        rng.shuffle(std::span<Vertex>(left));
        rng.shuffle(std::span<Vertex>(right));

        pending.clear();
        Vertex cursor = start;
        for (Vertex c : left) {
            pending.push_back({c, cursor});
            cursor += tree.subtree_size(c);
        }
        position[u] = cursor;
        cursor += 1;
        for (Vertex c : right) {
            pending.push_back({c, cursor});
            cursor += tree.subtree_size(c);
        }
        for (auto it = pending.rbegin(); it != pending.rend(); ++it) stack.push_back(*it);
    }
    return Arrangement::from_positions(std::move(position));
}

}  // namespace treeline
