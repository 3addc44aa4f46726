#include "treeline/counting.hpp"

#include <cstddef>
#include <vector>

namespace treeline {

namespace {

// Π_k (k!)^multiplicity[k]. Degrees repeat heavily, so raising each distinct
// factorial to its multiplicity and combining the handful of results pairwise
// keeps operand sizes balanced; multiplying a million factors one by one into
// a single growing product is quadratic and visibly slow at n ~ 10^6.
BigCount product_of_factorial_powers(const std::vector<std::size_t>& multiplicity) {
    std::vector<BigCount> terms;
    for (std::size_t k = 2; k < multiplicity.size(); ++k) {
        if (multiplicity[k] == 0) continue;
        BigCount term;
        mpz_pow_ui(term.get_mpz_t(), factorial(static_cast<Vertex>(k)).get_mpz_t(),
                   static_cast<unsigned long>(multiplicity[k]));
        terms.push_back(term);
    }
    if (terms.empty()) return 1;
    while (terms.size() > 1) {
        std::vector<BigCount> next;
        for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] * terms[i + 1]);
        if (terms.size() % 2 == 1) next.push_back(terms.back());
        terms.swap(next);
    }
    return terms.front();
}

}  // namespace

BigCount count_unconstrained(Vertex n) {
    return factorial(n);
}

BigCount count_projective(const RootedTree& tree) {
    std::vector<std::size_t> multiplicity(static_cast<std::size_t>(tree.vertex_count()) + 1, 0);
    for (Vertex u = 0; u < tree.vertex_count(); ++u)
        ++multiplicity[static_cast<std::size_t>(tree.out_degree(u)) + 1];
    return product_of_factorial_powers(multiplicity);
}

BigCount count_planar(const FreeTree& tree) {
    std::vector<std::size_t> multiplicity(static_cast<std::size_t>(tree.vertex_count()), 0);
    for (Vertex u = 0; u < tree.vertex_count(); ++u)
        ++multiplicity[static_cast<std::size_t>(tree.degree(u))];
    return BigCount(tree.vertex_count()) * product_of_factorial_powers(multiplicity);
}

Rational planar_projective_ratio(const RootedTree& tree) {
    return make_rational(tree.vertex_count(), tree.tree().degree(tree.root()) + 1);
}

Rational prob_planar(const FreeTree& tree) {
    return make_rational(count_planar(tree), count_unconstrained(tree.vertex_count()));
}

Rational prob_crossing(const FreeTree& tree) {
    return Rational(1) - prob_planar(tree);
}

}  // namespace treeline
