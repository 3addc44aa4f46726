#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "treeline/counting.hpp"
#include "treeline/expectations.hpp"

using namespace treeline;
using treeline::testing::path;
using treeline::testing::rooted_from_heads;
using treeline::testing::star;
using treeline::testing::thrown_kind;

TEST_CASE("unconstrained expectation is (n^2 - 1) / 3") {
    CHECK(expected_D_unconstrained(1) == Rational(0));
    CHECK(expected_D_unconstrained(2) == Rational(1));
    CHECK(expected_D_unconstrained(3) == make_rational(8, 3));
    CHECK(expected_D_unconstrained(4) == Rational(5));
    CHECK(expected_D_unconstrained(1000) == Rational(333333));
}

TEST_CASE("projective expectation over hand-checked rootings") {
    CHECK(expected_D_projective(root_at(path(3), 1)) == make_rational(8, 3));
    CHECK(expected_D_projective(root_at(path(3), 0)) == make_rational(5, 2));
    CHECK(expected_D_projective(root_at(path(4), 0)) == make_rational(9, 2));
    CHECK(expected_D_projective(root_at(star(4), 0)) == Rational(5));
    CHECK(expected_D_projective(root_at(star(4), 1)) == make_rational(14, 3));
    CHECK(expected_D_projective(root_at(path(1), 0)) == Rational(0));
    CHECK(expected_D_projective(root_at(path(2), 0)) == Rational(1));
}

TEST_CASE("root-pinned projective expectation") {
    CHECK(expected_D_projective_root_fixed(root_at(path(3), 0)) == make_rational(5, 2));
    CHECK(expected_D_projective_root_fixed(root_at(path(3), 1)) == Rational(3));
    CHECK(expected_D_projective_root_fixed(root_at(star(4), 0)) == Rational(6));
    // Pinning the root never lowers the expectation.
    Rng rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        FreeTree t = random_labeled_tree(7, rng);
        for (Vertex r = 0; r < 7; ++r) {
            RootedTree rooted = root_at(t, r);
            CHECK(expected_D_projective_root_fixed(rooted) >= expected_D_projective(rooted));
        }
    }
}

TEST_CASE("anchor and coanchor terms for root children") {
    RootedTree hub = root_at(star(4), 0);
    for (Vertex leaf = 1; leaf < 4; ++leaf) {
        CHECK(expected_anchor(hub, leaf) == Rational(1));            // (1 + 1) / 2
        CHECK(expected_coanchor(hub, leaf) == make_rational(2, 3));  // (4 - 1 - 1) / 3
        CHECK(expected_coanchor_root_fixed(hub, leaf) == Rational(1));
    }
    // Length of a root edge = 1 + anchor-part + coanchor-part in expectation:
    // for the star, 1 + anchor picks up the whole edge, coanchor the rest.
    RootedTree p = root_at(path(3), 0);
    CHECK(expected_anchor(p, 1) == make_rational(3, 2));  // child subtree has 2 vertices
    CHECK(expected_coanchor(p, 1) == Rational(0));
    CHECK(thrown_kind([&] { expected_anchor(p, 2); }) == ErrorKind::not_a_root_child);
    CHECK(thrown_kind([&] { expected_coanchor(p, 0); }) == ErrorKind::not_a_root_child);
}

TEST_CASE("planar expectation over hand-checked trees") {
    CHECK(expected_D_planar(path(3)) == make_rational(8, 3));
    CHECK(expected_D_planar(path(4)) == make_rational(19, 4));
    CHECK(expected_D_planar(star(4)) == Rational(5));
    CHECK(expected_D_planar(path(1)) == Rational(0));
    CHECK(expected_D_planar(path(2)) == Rational(1));
}

TEST_CASE("all planar expectation routes agree") {
    Rng rng(999);
    for (Vertex n : {2, 3, 5, 9, 17, 40}) {
        for (int trial = 0; trial < 8; ++trial) {
            FreeTree t = random_labeled_tree(n, rng);
            Rational fast = expected_D_planar(t);
            CHECK(fast == expected_D_planar_naive(t));
            CHECK(fast == expected_D_planar_by_root_average(t));
        }
    }
}

TEST_CASE("per-rooting projective expectations in one pass") {
    Rng rng(1000);
    for (Vertex n : {1, 2, 3, 6, 12, 33}) {
        for (int trial = 0; trial < 6; ++trial) {
            FreeTree t = random_labeled_tree(n, rng);
            std::vector<Rational> all = expected_D_projective_all_roots(t);
            REQUIRE(static_cast<Vertex>(all.size()) == n);
            for (Vertex r = 0; r < n; ++r) CHECK(all[r] == expected_D_projective(root_at(t, r)));
        }
    }
}

TEST_CASE("per-edge planar expectations sum to the total") {
    Rng rng(1001);
    for (Vertex n : {2, 4, 8, 21}) {
        for (int trial = 0; trial < 10; ++trial) {
            FreeTree t = random_labeled_tree(n, rng);
            DirectionalSizes sizes = compute_directional_sizes(t);
            Rational total = 0;
            for (auto [u, v] : t.edges()) total += expected_edge_length_planar(t, sizes, u, v);
            CHECK(total == expected_D_planar(t));
        }
    }
    // Hand-checked single edges.
    FreeTree p3 = path(3);
    DirectionalSizes s3 = compute_directional_sizes(p3);
    CHECK(expected_edge_length_planar(p3, s3, 0, 1) == make_rational(4, 3));
    FreeTree p4 = path(4);
    DirectionalSizes s4 = compute_directional_sizes(p4);
    CHECK(expected_edge_length_planar(p4, s4, 1, 2) == make_rational(7, 4));
    CHECK(expected_edge_length_planar(p4, s4, 0, 1) == make_rational(3, 2));
    CHECK(thrown_kind([&] { expected_edge_length_planar(p4, s4, 0, 2); }) ==
          ErrorKind::not_an_edge);
}

TEST_CASE("crossing-restricted expectation") {
    CHECK(expected_D_crossing(path(4)) == make_rational(11, 2));
    // Undefined exactly when every arrangement is planar: stars and n <= 3.
    CHECK(thrown_kind([] { expected_D_crossing(path(3)); }) == ErrorKind::undefined_value);
    CHECK(thrown_kind([] { expected_D_crossing(star(6)); }) == ErrorKind::undefined_value);
    CHECK(thrown_kind([] { expected_D_crossing(path(2)); }) == ErrorKind::undefined_value);
    CHECK(expected_D_crossing(path(5)).get_den() != 0);  // defined

    // Law of total expectation: E = p0 E_planar + (1 - p0) E_crossing.
    Rng rng(1002);
    for (int trial = 0; trial < 30; ++trial) {
        FreeTree t = random_labeled_tree(7, rng);
        Rational p0 = prob_planar(t);
        if (p0 == 1) continue;
        Rational total = p0 * expected_D_planar(t) + (Rational(1) - p0) * expected_D_crossing(t);
        CHECK(total == expected_D_unconstrained(7));
    }
}

TEST_CASE("expectations are invariant under vertex relabeling") {
    // The planar expectation depends only on the shape; relabel a caterpillar.
    FreeTree a = testing::tree_of(6, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {3, 6}});
    FreeTree b = testing::tree_of(6, {{6, 4}, {4, 1}, {1, 3}, {4, 2}, {1, 5}});
    CHECK(expected_D_planar(a) == expected_D_planar(b));
}

TEST_CASE("example sentence trees") {
    // The nine-word shifted dative: every baseline is computable and ordered.
    RootedTree t = rooted_from_heads({2, 0, 4, 2, 7, 7, 4, 9, 2});
    Rational unc = expected_D_unconstrained(9);
    Rational pl = expected_D_planar(t.tree());
    Rational pr = expected_D_projective(t);
    CHECK(unc == make_rational(80, 3));
    CHECK(pl < unc);
    CHECK(pr < pl);
}
