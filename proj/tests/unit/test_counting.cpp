#include "doctest.h"
#include "helpers.hpp"
#include "treeline/counting.hpp"

using namespace treeline;
using treeline::testing::path;
using treeline::testing::star;

TEST_CASE("unconstrained count is n factorial") {
    CHECK(count_unconstrained(1) == 1);
    CHECK(count_unconstrained(4) == 24);
    CHECK(count_unconstrained(10) == 3628800);
}

TEST_CASE("projective counts over hand-checked rootings") {
    // Path on 3, rooted at the middle: (2+1)! = 6.
    CHECK(count_projective(root_at(path(3), 1)) == 6);
    // Path on 3, rooted at an end: 2! * 2! = 4.
    CHECK(count_projective(root_at(path(3), 0)) == 4);
    // Path on 4, rooted second from the end: 3! * 2! = 12.
    CHECK(count_projective(root_at(path(4), 1)) == 12);
    // Path on 4, rooted at an end: 2! * 2! * 2! = 8.
    CHECK(count_projective(root_at(path(4), 0)) == 8);
    // Star on 4, rooted at the hub: 4! = 24.
    CHECK(count_projective(root_at(star(4), 0)) == 24);
    // Star on 4, rooted at a leaf: 2! * 3! = 12.
    CHECK(count_projective(root_at(star(4), 1)) == 12);
    // Single vertex.
    CHECK(count_projective(root_at(path(1), 0)) == 1);
}

TEST_CASE("planar counts over hand-checked trees") {
    CHECK(count_planar(path(3)) == 6);    // every arrangement of a 3-path is planar
    CHECK(count_planar(path(4)) == 16);   // 4 * 1! 2! 2! 1!
    CHECK(count_planar(star(4)) == 24);   // 4 * 3! = every arrangement
    CHECK(count_planar(path(1)) == 1);
    CHECK(count_planar(path(2)) == 2);
}

TEST_CASE("planar/projective ratio is n over root degree plus one") {
    CHECK(planar_projective_ratio(root_at(path(4), 0)) == make_rational(4, 2));
    CHECK(planar_projective_ratio(root_at(path(4), 1)) == make_rational(4, 3));
    // Equality holds exactly for a star rooted at its hub.
    CHECK(planar_projective_ratio(root_at(star(7), 0)) == Rational(1));
    CHECK(planar_projective_ratio(root_at(star(7), 3)) == make_rational(7, 2));
    // The ratio matches the counts themselves.
    for (Vertex r = 0; r < 4; ++r) {
        RootedTree t = root_at(path(4), r);
        CHECK(make_rational(count_planar(t.tree()), count_projective(t)) ==
              planar_projective_ratio(t));
    }
}

TEST_CASE("planarity probabilities") {
    CHECK(prob_planar(path(4)) == make_rational(16, 24));
    CHECK(prob_crossing(path(4)) == make_rational(8, 24));
    CHECK(prob_planar(star(5)) == Rational(1));
    CHECK(prob_crossing(star(5)) == Rational(0));
}
