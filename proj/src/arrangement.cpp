#include "treeline/arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "treeline/error.hpp"

namespace treeline {

const char* to_string(Constraint c) {
    switch (c) {
        case Constraint::none: return "none";
        case Constraint::planar: return "planar";
        case Constraint::projective: return "projective";
    }
    return "?";
}

namespace {

std::vector<Vertex> invert(const std::vector<Vertex>& map, const char* what) {
    std::vector<Vertex> inverse(map.size(), -1);
    Vertex n = static_cast<Vertex>(map.size());
    for (Vertex i = 0; i < n; ++i) {
        Vertex image = map[i];
        if (image < 0 || image >= n)
            fail(ErrorKind::invalid_argument, std::string(what) + " entry outside 0..n-1");
        if (inverse[image] != -1)
            fail(ErrorKind::invalid_argument, std::string(what) + " is not a bijection");
        inverse[image] = i;
    }
    return inverse;
}

}  // namespace

Arrangement Arrangement::from_positions(std::vector<Vertex> position_of_vertex) {
    Arrangement arr;
    arr.vertex_ = invert(position_of_vertex, "position map");
    arr.position_ = std::move(position_of_vertex);
    return arr;
}

Arrangement Arrangement::from_vertex_order(std::vector<Vertex> vertex_at_position) {
    Arrangement arr;
    arr.position_ = invert(vertex_at_position, "vertex order");
    arr.vertex_ = std::move(vertex_at_position);
    return arr;
}

Arrangement Arrangement::identity(Vertex n) {
    std::vector<Vertex> id(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) id[i] = i;
    Arrangement arr;
    arr.position_ = id;
    arr.vertex_ = std::move(id);
    return arr;
}

Arrangement Arrangement::reversed() const {
    Vertex n = size();
    std::vector<Vertex> position(position_.size());
    for (Vertex u = 0; u < n; ++u) position[u] = n - 1 - position_[u];
    return from_positions(std::move(position));
}

void write_arrangement_line(std::ostream& out, const Arrangement& arr) {
    for (Vertex pos = 0; pos < arr.size(); ++pos) {
        if (pos > 0) out << ' ';
        out << arr.vertex_at(pos) + 1;
    }
    out << '\n';
}

Arrangement read_arrangement_line(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(ErrorKind::parse_error, "missing arrangement line");
    std::istringstream fields(line);
    std::vector<Vertex> order;
    std::string token;
    while (fields >> token) {
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size())
            fail(ErrorKind::parse_error, "bad vertex id '" + token + "'");
        order.push_back(static_cast<Vertex>(value - 1));
    }
    if (order.empty()) fail(ErrorKind::parse_error, "empty arrangement line");
    return Arrangement::from_vertex_order(std::move(order));
}

namespace {

void require_same_size(Vertex n, const Arrangement& arr) {
    if (arr.size() != n)
        fail(ErrorKind::size_mismatch, "arrangement size " + std::to_string(arr.size()) +
                                           " does not match vertex count " + std::to_string(n));
}

}  // namespace

std::int64_t sum_edge_lengths(const FreeTree& tree, const Arrangement& arr) {
    require_same_size(tree.vertex_count(), arr);
    std::int64_t total = 0;
    for (auto [u, v] : tree.edges())
        total += std::abs(static_cast<std::int64_t>(arr.position(u)) - arr.position(v));
    return total;
}

std::int64_t count_crossings(const FreeTree& tree, const Arrangement& arr) {
    require_same_size(tree.vertex_count(), arr);
    auto edges = tree.edges();
    std::size_t m = edges.size();
    std::vector<std::pair<Vertex, Vertex>> spans(m);
    for (std::size_t i = 0; i < m; ++i) {
        Vertex a = arr.position(edges[i].first);
        Vertex b = arr.position(edges[i].second);
        spans[i] = {std::min(a, b), std::max(a, b)};
    }
    std::int64_t crossings = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            auto [alo, ahi] = spans[i];
            auto [blo, bhi] = spans[j];
            // Strictly interleaved endpoints; shared endpoints never cross.
            if ((alo < blo && blo < ahi && ahi < bhi) || (blo < alo && alo < bhi && bhi < ahi))
                ++crossings;
        }
    return crossings;
}

bool is_planar(const FreeTree& tree, const Arrangement& arr) {
    return count_crossings(tree, arr) == 0;
}

bool is_projective(const RootedTree& tree, const Arrangement& arr) {
    if (!is_planar(tree.tree(), arr)) return false;
    Vertex root_pos = arr.position(tree.root());
    for (auto [u, v] : tree.tree().edges()) {
        Vertex a = arr.position(u);
        Vertex b = arr.position(v);
        if (std::min(a, b) < root_pos && root_pos < std::max(a, b)) return false;
    }
    return true;
}

Rational mean_dependency_distance(const FreeTree& tree, const Arrangement& arr) {
    Vertex n = tree.vertex_count();
    if (n < 2) fail(ErrorKind::undefined_value, "mean distance undefined for a single vertex");
    return make_rational(sum_edge_lengths(tree, arr), n - 1);
}

}  // namespace treeline
