#include "treeline/expectations.hpp"

#include <vector>

#include "treeline/counting.hpp"
#include "treeline/error.hpp"

namespace treeline {

Rational expected_D_unconstrained(Vertex n) {
    return make_rational(BigCount(n) * n - 1, 3);
}

namespace {

// 6 * expected_D_projective + 1; fits in 64 bits because the sizes sum to at
// most n per out-degree unit and the out-degrees sum to n - 1.
std::int64_t projective_sum(const RootedTree& tree) {
    std::int64_t sum = 0;
    for (Vertex u = 0; u < tree.vertex_count(); ++u)
        sum += static_cast<std::int64_t>(tree.subtree_size(u)) * (2 * tree.out_degree(u) + 1);
    return sum;
}

}  // namespace

Rational expected_D_projective(const RootedTree& tree) {
    return make_rational(projective_sum(tree) - 1, 6);
}

Rational expected_anchor(const RootedTree& tree, Vertex child) {
    if (child < 0 || child >= tree.vertex_count() || tree.parent(child) != tree.root())
        fail(ErrorKind::not_a_root_child, "vertex is not a child of the root");
    return make_rational(tree.subtree_size(child) + 1, 2);
}

Rational expected_coanchor(const RootedTree& tree, Vertex child) {
    if (child < 0 || child >= tree.vertex_count() || tree.parent(child) != tree.root())
        fail(ErrorKind::not_a_root_child, "vertex is not a child of the root");
    return make_rational(tree.vertex_count() - tree.subtree_size(child) - 1, 3);
}

Rational expected_coanchor_root_fixed(const RootedTree& tree, Vertex child) {
    // Pinning the root to the first position inflates the coanchor by 3/2.
    if (child < 0 || child >= tree.vertex_count() || tree.parent(child) != tree.root())
        fail(ErrorKind::not_a_root_child, "vertex is not a child of the root");
    return make_rational(tree.vertex_count() - tree.subtree_size(child) - 1, 2);
}

Rational expected_D_projective_root_fixed(const RootedTree& tree) {
    Rational total = expected_D_projective(tree);
    for (Vertex c : tree.children(tree.root()))
        total += expected_coanchor(tree, c) * make_rational(1, 2);
    return total;
}

Rational expected_D_planar(const FreeTree& tree) {
    Vertex n = tree.vertex_count();
    if (n == 1) return Rational(0);
    DirectionalSizes sizes(tree);

    // (n-1)(3n^2 + 2n - 2)/(6n) minus the degree-weighted squared sizes.
    // Per-vertex squared-size sums fit in 64 bits (each bounded by (n-1)^2);
    // the grand total is accumulated exactly.
    BigCount weighted = 0;
    for (Vertex u = 0; u < n; ++u) {
        std::uint64_t squares = 0;
        for (std::int64_t slot = tree.slot_begin(u); slot < tree.slot_end(u); ++slot) {
            std::uint64_t s = static_cast<std::uint64_t>(sizes.toward_slot(slot));
            squares += s * s;
        }
        BigCount term(static_cast<unsigned long>(2 * tree.degree(u) - 1));
        term *= BigCount(squares);
        weighted += term;
    }

    BigCount nn(n);
    BigCount lead = (nn - 1) * (3 * nn * nn + 2 * nn - 2);
    return make_rational(lead - weighted, 6 * nn);
}

Rational expected_D_planar_naive(const FreeTree& tree) {
    Vertex n = tree.vertex_count();
    Rational total = 0;
    for (Vertex u = 0; u < n; ++u)
        total += expected_D_projective_root_fixed(root_at(tree, u));
    return total / n;
}

namespace {

// 6 * expected_D_projective + 1 for every rooting: computed at vertex 0,
// then pushed across each edge (u, v) by the closed-form difference
//   6 * (E_pr(u) - E_pr(v)) = s_u(v) * (2 deg(v) - 1)
//                           + 2n * (deg(u) - deg(v))
//                           - s_v(u) * (2 deg(u) - 1).
std::vector<std::int64_t> projective_sums_all_roots(const FreeTree& tree,
                                                    const DirectionalSizes& sizes) {
    Vertex n = tree.vertex_count();
    std::vector<std::int64_t> sums(static_cast<std::size_t>(n));
    sums[0] = projective_sum(root_at(tree, 0));

    std::vector<Vertex> queue{0};
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    visited[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (std::int64_t slot = tree.slot_begin(u); slot < tree.slot_end(u); ++slot) {
            Vertex v = tree.slot_target(slot);
            if (visited[v]) continue;
            visited[v] = 1;
            std::int64_t s_uv = sizes.toward_slot(slot);
            std::int64_t s_vu = n - s_uv;
            std::int64_t diff = s_uv * (2 * tree.degree(v) - 1) +
                                2 * static_cast<std::int64_t>(n) * (tree.degree(u) - tree.degree(v)) -
                                s_vu * (2 * tree.degree(u) - 1);
            sums[v] = sums[u] - diff;
            queue.push_back(v);
        }
    }
    return sums;
}

}  // namespace

std::vector<Rational> expected_D_projective_all_roots(const FreeTree& tree) {
    DirectionalSizes sizes(tree);
    std::vector<std::int64_t> sums = projective_sums_all_roots(tree, sizes);
    std::vector<Rational> values;
    values.reserve(sums.size());
    for (std::int64_t s : sums) values.push_back(make_rational(s - 1, 6));
    return values;
}

Rational expected_D_planar_by_root_average(const FreeTree& tree) {
    Vertex n = tree.vertex_count();
    if (n == 1) return Rational(0);
    DirectionalSizes sizes(tree);
    std::vector<std::int64_t> sums = projective_sums_all_roots(tree, sizes);
    BigCount total = 0;
    for (std::int64_t s : sums) total += s - 1;  // 6 E_pr per rooting
    BigCount nn(n);
    // (n-1)(n-2)/(6n) + average projective expectation.
    return make_rational((nn - 1) * (nn - 2) + total, 6 * nn);
}

Rational expected_edge_length_planar(const FreeTree& tree, const DirectionalSizes& sizes,
                                     Vertex u, Vertex v) {
    Vertex n = tree.vertex_count();
    std::int64_t s_uv = -1, s_vu = -1;
    for (std::int64_t slot = tree.slot_begin(u); slot < tree.slot_end(u); ++slot)
        if (tree.slot_target(slot) == v) s_uv = sizes.toward_slot(slot);
    if (s_uv < 0)
        fail(ErrorKind::not_an_edge, "(" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                                         ") is not an edge");
    s_vu = n - s_uv;

    // Group the outside vertices r by the neighbor subtree that contains
    // them: every r in the subtree toward w sees the same pair of sizes, the
    // near endpoint's size s_w(near) and the constant far size across the
    // edge.  Each r contributes (2 s_r(near) + s_r(far) + 1) / 6.
    BigCount total = 0;
    for (std::int64_t slot = tree.slot_begin(u); slot < tree.slot_end(u); ++slot) {
        Vertex w = tree.slot_target(slot);
        if (w == v) continue;
        BigCount group(static_cast<long>(sizes.toward_slot(slot)));
        BigCount near(static_cast<long>(n - sizes.toward_slot(slot)));
        total += group * 2 * near;
    }
    for (std::int64_t slot = tree.slot_begin(v); slot < tree.slot_end(v); ++slot) {
        Vertex w = tree.slot_target(slot);
        if (w == u) continue;
        BigCount group(static_cast<long>(sizes.toward_slot(slot)));
        BigCount near(static_cast<long>(n - sizes.toward_slot(slot)));
        total += group * 2 * near;
    }
    total += BigCount(static_cast<long>(s_uv)) * (s_vu - 1);  // far size for r on u's side
    total += BigCount(static_cast<long>(s_vu)) * (s_uv - 1);  // far size for r on v's side
    total += n - 2;

    return Rational(1) + make_rational(total, BigCount(6) * n);
}

Rational expected_D_crossing(const FreeTree& tree) {
    Vertex n = tree.vertex_count();
    BigCount planar = count_planar(tree);
    BigCount all = count_unconstrained(n);
    if (planar == all)
        fail(ErrorKind::undefined_value,
             "every arrangement of this tree is planar; no crossing arrangements exist");
    Rational p_planar = make_rational(planar, all);
    Rational p_crossing = Rational(1) - p_planar;
    Rational value = (expected_D_unconstrained(n) - expected_D_planar(tree) * p_planar) / p_crossing;
    value.canonicalize();
    return value;
}

}  // namespace treeline
