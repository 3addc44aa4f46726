#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treeline/error.hpp"
#include "treeline/tree.hpp"

namespace treeline::testing {

// Runs f and reports the ErrorKind it throws, if any.
template <typename F>
std::optional<ErrorKind> thrown_kind(F&& f) {
    try {
        std::forward<F>(f)();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// 1-based edges, validated.
inline FreeTree tree_of(Vertex n, const EdgeList& edges) {
    return from_edge_list(n, edges);
}

inline FreeTree path(Vertex n) {
    EdgeList edges;
    for (Vertex u = 1; u < n; ++u) edges.push_back({u, u + 1});
    return tree_of(n, edges);
}

inline FreeTree star(Vertex n) {
    EdgeList edges;
    for (Vertex u = 2; u <= n; ++u) edges.push_back({1, u});
    return tree_of(n, edges);
}

// 1-based head vector (0 at the root) to a rooted tree.
inline RootedTree rooted_from_heads(const std::vector<Vertex>& heads) {
    EdgeList edges;
    Vertex root = 0;
    for (Vertex i = 0; i < static_cast<Vertex>(heads.size()); ++i) {
        if (heads[i] == 0)
            root = i + 1;
        else
            edges.push_back({heads[i], i + 1});
    }
    return root_at(tree_of(static_cast<Vertex>(heads.size()), edges), root - 1);
}

}  // namespace treeline::testing
