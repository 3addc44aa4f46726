#include "treeline/tree.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "treeline/error.hpp"

namespace treeline {

FreeTree::FreeTree(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges)
    : n_(n), edges_(edges.begin(), edges.end()) {
    offset_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : edges_) {
        ++offset_[u + 1];
        ++offset_[v + 1];
    }
    for (Vertex u = 0; u < n; ++u) offset_[u + 1] += offset_[u];

    adjacency_.resize(edges_.size() * 2);
    twin_.resize(edges_.size() * 2);
    std::vector<std::int64_t> cursor(offset_.begin(), offset_.end() - 1);
    for (auto [u, v] : edges_) {
        std::int64_t su = cursor[u]++;
        std::int64_t sv = cursor[v]++;
        adjacency_[su] = v;
        adjacency_[sv] = u;
        twin_[su] = sv;
        twin_[sv] = su;
    }
}

FreeTree from_edge_list(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges_1based) {
    if (n < 1) fail(ErrorKind::invalid_argument, "vertex count must be positive");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(edges_1based.size());
    for (auto [u, v] : edges_1based) {
        if (u < 1 || u > n || v < 1 || v > n)
            fail(ErrorKind::id_out_of_range,
                 "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside 1.." +
                     std::to_string(n));
        if (u == v)
            fail(ErrorKind::cycle, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(u - 1, v - 1);
    }

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        std::uint64_t lo = static_cast<std::uint32_t>(std::min(u, v));
        std::uint64_t hi = static_cast<std::uint32_t>(std::max(u, v));
        if (!seen.insert((hi << 32) | lo).second)
            fail(ErrorKind::cycle, "repeated edge (" + std::to_string(u + 1) + ", " +
                                       std::to_string(v + 1) + ")");
    }

    if (std::ssize(edges) > n - 1)
        fail(ErrorKind::wrong_edge_count, "expected " + std::to_string(n - 1) + " edges, got " +
                                              std::to_string(edges.size()));

    FreeTree tree(n, edges);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    visited[0] = 1;
    Vertex reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : tree.neighbors(u)) {
            if (!visited[v]) {
                visited[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    if (reached != n) fail(ErrorKind::disconnected, "graph is not connected");
    return tree;
}

RootedTree::RootedTree(FreeTree tree, Vertex root) : tree_(std::move(tree)), root_(root) {
    Vertex n = tree_.vertex_count();
    if (root < 0 || root >= n)
        fail(ErrorKind::root_out_of_range, "root " + std::to_string(root + 1) + " outside 1.." +
                                               std::to_string(n));

    parent_.assign(static_cast<std::size_t>(n), -1);
    preorder_.clear();
    preorder_.reserve(static_cast<std::size_t>(n));
    std::vector<Vertex> stack{root};
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    visited[root] = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        preorder_.push_back(u);
        for (Vertex v : tree_.neighbors(u)) {
            if (!visited[v]) {
                visited[v] = 1;
                parent_[v] = u;
                stack.push_back(v);
            }
        }
    }

    child_offset_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v)
        if (parent_[v] >= 0) ++child_offset_[parent_[v] + 1];
    for (Vertex u = 0; u < n; ++u) child_offset_[u + 1] += child_offset_[u];
    child_flat_.resize(static_cast<std::size_t>(n) - 1);
    std::vector<std::int64_t> cursor(child_offset_.begin(), child_offset_.end() - 1);
    // Children inherit the parent's adjacency order.
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : tree_.neighbors(u))
            if (parent_[v] == u) child_flat_[cursor[u]++] = v;

    subtree_size_.assign(static_cast<std::size_t>(n), 1);
    for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it)
        if (parent_[*it] >= 0) subtree_size_[parent_[*it]] += subtree_size_[*it];
}

RootedTree root_at(const FreeTree& tree, Vertex root) {
    return RootedTree(tree, root);
}

DirectionalSizes::DirectionalSizes(const FreeTree& tree) {
    Vertex n = tree.vertex_count();
    toward_.assign(static_cast<std::size_t>(2) * (n - 1 > 0 ? n - 1 : 0), 0);
    if (n <= 1) return;

    RootedTree rooted(tree, 0);
    // For the parent->child direction the size is the child's subtree; the
    // twin direction sees the rest of the tree.
    for (Vertex u = 0; u < n; ++u) {
        for (std::int64_t slot = tree.slot_begin(u); slot < tree.slot_end(u); ++slot) {
            Vertex v = tree.slot_target(slot);
            if (rooted.parent(v) == u) {
                toward_[slot] = rooted.subtree_size(v);
                toward_[tree.twin(slot)] = n - rooted.subtree_size(v);
            }
        }
    }
}

Vertex DirectionalSizes::toward(const FreeTree& tree, Vertex u, Vertex v) const {
    for (std::int64_t slot = tree.slot_begin(u); slot < tree.slot_end(u); ++slot)
        if (tree.slot_target(slot) == v) return toward_[slot];
    fail(ErrorKind::not_an_edge, "(" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                                     ") is not an edge");
}

DirectionalSizes compute_directional_sizes(const FreeTree& tree) {
    return DirectionalSizes(tree);
}

FreeTree from_pruefer(Vertex n, std::span<const Vertex> sequence) {
    if (n < 1) fail(ErrorKind::invalid_argument, "vertex count must be positive");
    if (std::ssize(sequence) != std::max<std::int64_t>(0, n - 2))
        fail(ErrorKind::invalid_argument, "sequence length must be n-2");
    for (Vertex a : sequence)
        if (a < 0 || a >= n) fail(ErrorKind::id_out_of_range, "sequence entry outside 0..n-1");

    std::vector<std::pair<Vertex, Vertex>> edges;
    if (n == 1) return FreeTree(1, edges);
    edges.reserve(static_cast<std::size_t>(n) - 1);
    if (n == 2) {
        edges.emplace_back(0, 1);
        return FreeTree(2, edges);
    }

    std::vector<Vertex> degree(static_cast<std::size_t>(n), 1);
    for (Vertex a : sequence) ++degree[a];

    Vertex ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    Vertex leaf = ptr;
    for (Vertex a : sequence) {
        edges.emplace_back(leaf, a);
        if (--degree[a] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return FreeTree(n, edges);
}

FreeTree random_labeled_tree(Vertex n, Rng& rng) {
    if (n < 1) fail(ErrorKind::invalid_argument, "vertex count must be positive");
    std::vector<Vertex> sequence(static_cast<std::size_t>(std::max(0, n - 2)));
    for (Vertex& a : sequence)
        a = static_cast<Vertex>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    return from_pruefer(n, sequence);
}

namespace {

std::int64_t parse_integer(const std::string& token, const char* what) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        fail(ErrorKind::parse_error, std::string("expected ") + what + ", got '" + token + "'");
    }
    if (used != token.size())
        fail(ErrorKind::parse_error, std::string("expected ") + what + ", got '" + token + "'");
    return value;
}

}  // namespace

FreeTree read_edge_list(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(ErrorKind::parse_error, "missing vertex count line");
    std::int64_t n = parse_integer(line, "vertex count");
    if (n < 1 || n > (1 << 30)) fail(ErrorKind::parse_error, "vertex count out of range");

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (std::int64_t i = 0; i < n - 1; ++i) {
        if (!std::getline(in, line))
            fail(ErrorKind::parse_error, "expected " + std::to_string(n - 1) + " edge lines");
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra))
            fail(ErrorKind::parse_error, "edge line must hold exactly two ids: '" + line + "'");
        edges.emplace_back(static_cast<Vertex>(parse_integer(a, "vertex id")),
                           static_cast<Vertex>(parse_integer(b, "vertex id")));
    }
    return from_edge_list(static_cast<Vertex>(n), edges);
}

void write_edge_list(std::ostream& out, const FreeTree& tree) {
    out << tree.vertex_count() << '\n';
    for (auto [u, v] : tree.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

RootedTree read_head_vector(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(ErrorKind::parse_error, "missing head vector line");
    std::istringstream fields(line);
    std::vector<std::int64_t> heads;
    std::string token;
    while (fields >> token) heads.push_back(parse_integer(token, "head id"));
    if (heads.empty()) fail(ErrorKind::parse_error, "empty head vector");

    Vertex n = static_cast<Vertex>(heads.size());
    Vertex root = -1;
    std::vector<std::pair<Vertex, Vertex>> edges_1based;
    edges_1based.reserve(static_cast<std::size_t>(n) - 1);
    for (Vertex i = 0; i < n; ++i) {
        std::int64_t h = heads[i];
        if (h < 0 || h > n)
            fail(ErrorKind::id_out_of_range, "head " + std::to_string(h) + " outside 0.." +
                                                 std::to_string(n));
        if (h == 0) {
            if (root >= 0) fail(ErrorKind::parse_error, "more than one root in head vector");
            root = i;
        } else {
            edges_1based.emplace_back(static_cast<Vertex>(h), i + 1);
        }
    }
    if (root < 0) fail(ErrorKind::parse_error, "head vector has no root");
    return root_at(from_edge_list(n, edges_1based), root);
}

std::vector<Vertex> head_vector(const RootedTree& tree) {
    Vertex n = tree.vertex_count();
    std::vector<Vertex> heads(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u) heads[u] = tree.parent(u) + 1;
    heads[tree.root()] = 0;
    return heads;
}

}  // namespace treeline
