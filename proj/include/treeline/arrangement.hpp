#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "treeline/rational.hpp"
#include "treeline/tree.hpp"

namespace treeline {

enum class Constraint { none, planar, projective };

const char* to_string(Constraint c);

// Bijection between vertices and positions 0..n-1 (1-based in text form).
class Arrangement {
public:
    // Validates that positions form a bijection; errors with invalid_argument.
    static Arrangement from_positions(std::vector<Vertex> position_of_vertex);
    static Arrangement from_vertex_order(std::vector<Vertex> vertex_at_position);
    static Arrangement identity(Vertex n);

    Vertex size() const { return static_cast<Vertex>(position_.size()); }
    Vertex position(Vertex u) const { return position_[u]; }
    Vertex vertex_at(Vertex pos) const { return vertex_[pos]; }

    Arrangement reversed() const;

    bool operator==(const Arrangement&) const = default;

    // Total order for canonical enumeration output: by position sequence.
    bool operator<(const Arrangement& other) const { return position_ < other.position_; }

private:
    std::vector<Vertex> position_;
    std::vector<Vertex> vertex_;
};

// One line of n vertex ids (1-based) in position order.
void write_arrangement_line(std::ostream& out, const Arrangement& arr);
Arrangement read_arrangement_line(std::istream& in);

// D: sum of |position(u) - position(v)| over the edges.
std::int64_t sum_edge_lengths(const FreeTree& tree, const Arrangement& arr);

// Number of crossing edge pairs; O(m^2) by design (m = n-1).
std::int64_t count_crossings(const FreeTree& tree, const Arrangement& arr);

bool is_planar(const FreeTree& tree, const Arrangement& arr);

// Planar and no edge strictly covers the root's position.
bool is_projective(const RootedTree& tree, const Arrangement& arr);

// D / (n - 1); errors with undefined_value when n = 1.
Rational mean_dependency_distance(const FreeTree& tree, const Arrangement& arr);

}  // namespace treeline
