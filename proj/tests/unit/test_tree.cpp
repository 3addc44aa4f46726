#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "treeline/tree.hpp"
#include "treeline/verify.hpp"

using namespace treeline;
using treeline::testing::EdgeList;
using treeline::testing::thrown_kind;

TEST_CASE("free tree adjacency follows edge order and twins invert") {
    FreeTree t = testing::tree_of(4, {{2, 1}, {2, 3}, {3, 4}});
    CHECK(t.vertex_count() == 4);
    CHECK(t.degree(0) == 1);
    CHECK(t.degree(1) == 2);
    CHECK(t.degree(2) == 2);
    CHECK(t.degree(3) == 1);
    // Vertex 1 (0-based) saw edges to 0 then 2, in defining order.
    REQUIRE(t.neighbors(1).size() == 2);
    CHECK(t.neighbors(1)[0] == 0);
    CHECK(t.neighbors(1)[1] == 2);
    for (Vertex u = 0; u < t.vertex_count(); ++u)
        for (auto slot = t.slot_begin(u); slot < t.slot_end(u); ++slot) {
            auto back = t.twin(slot);
            CHECK(t.slot_target(back) == u);
            CHECK(t.twin(back) == slot);
        }
    CHECK(t.edges().size() == 3);
    CHECK(t.edges()[0] == std::pair<Vertex, Vertex>{1, 0});
}

TEST_CASE("edge list validation reports the right error kinds") {
    CHECK(thrown_kind([] { testing::tree_of(3, {{1, 2}, {2, 4}}); }) == ErrorKind::id_out_of_range);
    CHECK(thrown_kind([] { testing::tree_of(3, {{0, 2}, {2, 3}}); }) == ErrorKind::id_out_of_range);
    CHECK(thrown_kind([] { testing::tree_of(3, {{1, 1}, {2, 3}}); }) == ErrorKind::cycle);
    CHECK(thrown_kind([] { testing::tree_of(3, {{1, 2}, {2, 1}}); }) == ErrorKind::cycle);
    CHECK(thrown_kind([] { testing::tree_of(3, {{1, 2}, {2, 3}, {3, 1}}); }) ==
          ErrorKind::wrong_edge_count);
    CHECK(thrown_kind([] { testing::tree_of(4, {{1, 2}, {3, 4}}); }) == ErrorKind::disconnected);
    CHECK(thrown_kind([] { testing::tree_of(1, {}); }) == std::nullopt);
}

TEST_CASE("rooted tree exposes parents, children, subtree sizes, preorder") {
    // Star on 4 vertices, hub 1, rooted at the hub.
    RootedTree hub = root_at(testing::star(4), 0);
    CHECK(hub.root() == 0);
    CHECK(hub.parent(0) == -1);
    CHECK(hub.out_degree(0) == 3);
    CHECK(hub.subtree_size(0) == 4);
    for (Vertex leaf = 1; leaf < 4; ++leaf) {
        CHECK(hub.parent(leaf) == 0);
        CHECK(hub.out_degree(leaf) == 0);
        CHECK(hub.subtree_size(leaf) == 1);
    }

    // Same star rooted at a leaf.
    RootedTree leaf = root_at(testing::star(4), 2);
    CHECK(leaf.parent(0) == 2);
    CHECK(leaf.out_degree(0) == 2);
    CHECK(leaf.subtree_size(0) == 3);
    CHECK(leaf.subtree_size(2) == 4);

    // Preorder: every parent appears before each of its children.
    RootedTree p = root_at(testing::path(6), 3);
    std::vector<Vertex> seen_at(6, -1);
    auto order = p.preorder();
    REQUIRE(order.size() == 6);
    for (Vertex i = 0; i < 6; ++i) seen_at[order[i]] = i;
    for (Vertex u = 0; u < 6; ++u)
        if (p.parent(u) != -1) CHECK(seen_at[p.parent(u)] < seen_at[u]);

    CHECK(thrown_kind([] { root_at(testing::path(3), 3); }) == ErrorKind::root_out_of_range);
    CHECK(thrown_kind([] { root_at(testing::path(3), -1); }) == ErrorKind::root_out_of_range);
}

TEST_CASE("directional sizes satisfy the splitting identities") {
    for (Vertex n : {2, 3, 5, 8}) {
        Rng rng(91 + n);
        for (int trial = 0; trial < 20; ++trial) {
            FreeTree t = random_labeled_tree(n, rng);
            DirectionalSizes sizes = compute_directional_sizes(t);
            for (Vertex u = 0; u < n; ++u) {
                std::int64_t around = 0;
                for (auto slot = t.slot_begin(u); slot < t.slot_end(u); ++slot) {
                    Vertex v = t.slot_target(slot);
                    CHECK(sizes.toward_slot(slot) + sizes.toward_slot(t.twin(slot)) == n);
                    CHECK(sizes.toward_slot(slot) == sizes.toward(t, u, v));
                    around += sizes.toward_slot(slot);
                }
                CHECK(around == n - 1);
            }
        }
    }
    FreeTree p4 = testing::path(4);
    DirectionalSizes s4 = compute_directional_sizes(p4);
    CHECK(s4.toward(p4, 1, 2) == 2);
    CHECK(s4.toward(p4, 2, 1) == 2);
    CHECK(s4.toward(p4, 0, 1) == 3);
    CHECK(thrown_kind([&] { s4.toward(p4, 0, 2); }) == ErrorKind::not_an_edge);
}

TEST_CASE("pruefer decoding enumerates every labeled tree exactly once") {
    // n^(n-2) distinct trees for n in 1..6: 1, 1, 3, 16, 125, 1296.
    const std::vector<std::int64_t> expected = {1, 1, 3, 16, 125, 1296};
    for (Vertex n = 1; n <= 6; ++n) {
        std::set<std::string> seen;
        std::int64_t visits = 0;
        for_each_labeled_tree(n, [&](const FreeTree& t) {
            ++visits;
            CHECK(t.vertex_count() == n);
            seen.insert(describe(t));
        });
        CHECK(visits == expected[n - 1]);
        CHECK(static_cast<std::int64_t>(seen.size()) == expected[n - 1]);
    }
}

TEST_CASE("pruefer decoding matches hand-computed examples") {
    // Sequence (3, 3) on 4 vertices (0-based): star with hub 3.
    std::vector<Vertex> seq = {3, 3};
    FreeTree t = from_pruefer(4, seq);
    CHECK(t.degree(3) == 3);
    // Sequence (1, 0) on 4 vertices: edges 2-1, 1-0, 0-3.
    std::vector<Vertex> seq2 = {1, 0};
    FreeTree t2 = from_pruefer(4, seq2);
    DirectionalSizes s2 = compute_directional_sizes(t2);
    CHECK(s2.toward(t2, 1, 2) == 1);
    CHECK(s2.toward(t2, 0, 3) == 1);
    CHECK(t2.degree(0) == 2);
    CHECK(t2.degree(1) == 2);
}

TEST_CASE("random labeled trees are deterministic per seed") {
    Rng a(12345), b(12345), c(54321);
    FreeTree ta = random_labeled_tree(30, a);
    FreeTree tb = random_labeled_tree(30, b);
    FreeTree tc = random_labeled_tree(30, c);
    CHECK(describe(ta) == describe(tb));
    CHECK(describe(ta) != describe(tc));  // 30^28 trees; a collision would be a bug
}

TEST_CASE("edge list text round trips") {
    FreeTree t = testing::tree_of(5, {{2, 1}, {2, 3}, {3, 4}, {4, 5}});
    std::ostringstream out;
    write_edge_list(out, t);
    CHECK(out.str() == "5\n2 1\n2 3\n3 4\n4 5\n");
    std::istringstream in(out.str());
    FreeTree back = read_edge_list(in);
    CHECK(describe(back) == describe(t));

    std::istringstream garbage("not a number");
    CHECK(thrown_kind([&] { read_edge_list(garbage); }) == ErrorKind::parse_error);
    std::istringstream truncated("3\n1 2\n");
    CHECK(thrown_kind([&] { read_edge_list(truncated); }) == ErrorKind::parse_error);
}

TEST_CASE("head vector text round trips and validates") {
    std::istringstream in("2 0 2 2");
    RootedTree t = read_head_vector(in);
    CHECK(t.vertex_count() == 4);
    CHECK(t.root() == 1);
    CHECK(t.out_degree(1) == 3);
    std::vector<Vertex> heads = head_vector(t);
    CHECK(heads == std::vector<Vertex>{2, 0, 2, 2});

    std::istringstream no_root("2 1 2");
    CHECK(thrown_kind([&] { read_head_vector(no_root); }) == ErrorKind::parse_error);
    std::istringstream two_roots("0 0 2");
    CHECK(thrown_kind([&] { read_head_vector(two_roots); }) == ErrorKind::parse_error);
    std::istringstream out_of_range("2 0 9");
    CHECK(thrown_kind([&] { read_head_vector(out_of_range); }) == ErrorKind::id_out_of_range);
    std::istringstream cyclic("2 3 2 0");  // 2 and 3 head each other
    CHECK(thrown_kind([&] { read_head_vector(cyclic); }) == ErrorKind::cycle);
    std::istringstream empty("");
    CHECK(thrown_kind([&] { read_head_vector(empty); }) == ErrorKind::parse_error);
}
