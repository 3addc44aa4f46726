#include "treeline/oracle.hpp"

#include <algorithm>
#include <string>

#include "treeline/error.hpp"

namespace treeline {

namespace {

void check_limit(Vertex n, Vertex limit, const char* which) {
    if (n > limit)
        fail(ErrorKind::enumeration_limit, std::string(which) + " enumeration limited to n <= " +
                                               std::to_string(limit) + ", got n = " +
                                               std::to_string(n));
}

}  // namespace

ArrangementSet enumerate_all(const FreeTree& tree, const EnumerationLimits& limits) {
    Vertex n = tree.vertex_count();
    check_limit(n, limits.max_n_unconstrained, "unconstrained");

    std::vector<Vertex> positions(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) positions[i] = i;

    ArrangementSet set{tree, Constraint::none, std::nullopt, {}};
    do {
        set.items.push_back(Arrangement::from_positions(positions));
    } while (std::next_permutation(positions.begin(), positions.end()));
    return set;
}

namespace {

using Sequence = std::vector<Vertex>;  // vertices of one subtree, position order

// All projective linearizations of the subtree rooted at u: every
// permutation of u plus its child segments, each child segment running over
// its own linearizations independently.  Permutations iterate in
// lexicographic vertex-id order, the segment choices as an odometer with the
// last segment fastest.
std::vector<Sequence> projective_sequences(const RootedTree& tree, Vertex u) {
    auto children = tree.children(u);
    std::vector<std::vector<Sequence>> child_options;
    child_options.reserve(children.size());
    for (Vertex c : children) child_options.push_back(projective_sequences(tree, c));

    std::vector<Vertex> items{u};
    items.insert(items.end(), children.begin(), children.end());
    std::sort(items.begin(), items.end());

    // Map a vertex back to its option list (u itself has the single option [u]).
    auto options_of = [&](Vertex item) -> const std::vector<Sequence>* {
        for (std::size_t i = 0; i < children.size(); ++i)
            if (children[i] == item) return &child_options[i];
        return nullptr;
    };

    std::vector<Sequence> result;
    do {
        std::vector<std::size_t> choice(items.size(), 0);
        for (;;) {
            Sequence seq;
            seq.reserve(static_cast<std::size_t>(tree.subtree_size(u)));
            for (std::size_t slot = 0; slot < items.size(); ++slot) {
                if (items[slot] == u) {
                    seq.push_back(u);
                } else {
                    const auto& opts = *options_of(items[slot]);
                    const Sequence& part = opts[choice[slot]];
                    seq.insert(seq.end(), part.begin(), part.end());
                }
            }
            result.push_back(std::move(seq));

            std::size_t slot = items.size();
            while (slot > 0) {
                --slot;
                if (items[slot] == u) continue;
                const auto& opts = *options_of(items[slot]);
                if (++choice[slot] < opts.size()) break;
                choice[slot] = 0;
            }
            bool rolled_over = true;
            for (std::size_t s = 0; s < items.size(); ++s)
                if (choice[s] != 0) rolled_over = false;
            if (rolled_over) break;
        }
    } while (std::next_permutation(items.begin(), items.end()));
    return result;
}

}  // namespace

ArrangementSet enumerate_projective(const RootedTree& tree, const EnumerationLimits& limits) {
    check_limit(tree.vertex_count(), limits.max_n_constrained, "projective");
    ArrangementSet set{tree.tree(), Constraint::projective, tree.root(), {}};
    for (Sequence& seq : projective_sequences(tree, tree.root()))
        set.items.push_back(Arrangement::from_vertex_order(std::move(seq)));
    std::sort(set.items.begin(), set.items.end());
    return set;
}

ArrangementSet enumerate_planar(const FreeTree& tree, const EnumerationLimits& limits) {
    Vertex n = tree.vertex_count();
    check_limit(n, limits.max_n_constrained, "planar");
    ArrangementSet set{tree, Constraint::planar, std::nullopt, {}};
    if (n == 1) {
        set.items.push_back(Arrangement::identity(1));
        return set;
    }

    // First position ranges over every vertex; the rest of the line is any
    // permutation of its neighbor segments, each filled projectively.
    for (Vertex first = 0; first < n; ++first) {
        RootedTree rooted = root_at(tree, first);
        auto neighbors = tree.neighbors(first);
        std::vector<Vertex> segs(neighbors.begin(), neighbors.end());
        std::sort(segs.begin(), segs.end());

        std::vector<std::vector<Sequence>> options;  // aligned with sorted segs
        options.reserve(segs.size());
        for (Vertex s : segs) options.push_back(projective_sequences(rooted, s));
        auto options_of = [&, sorted = segs](Vertex s) -> const std::vector<Sequence>* {
            for (std::size_t k = 0; k < sorted.size(); ++k)
                if (sorted[k] == s) return &options[k];
            return nullptr;
        };

        do {
            std::vector<const std::vector<Sequence>*> opt_of(segs.size());
            for (std::size_t i = 0; i < segs.size(); ++i) opt_of[i] = options_of(segs[i]);

            std::vector<std::size_t> choice(segs.size(), 0);
            for (;;) {
                Sequence seq{first};
                for (std::size_t i = 0; i < segs.size(); ++i) {
                    const Sequence& part = (*opt_of[i])[choice[i]];
                    seq.insert(seq.end(), part.begin(), part.end());
                }
                set.items.push_back(Arrangement::from_vertex_order(std::move(seq)));

                std::size_t slot = segs.size();
                while (slot > 0) {
                    --slot;
                    if (++choice[slot] < opt_of[slot]->size()) break;
                    choice[slot] = 0;
                }
                bool rolled_over = true;
                for (std::size_t s = 0; s < segs.size(); ++s)
                    if (choice[s] != 0) rolled_over = false;
                if (rolled_over) break;
            }
        } while (std::next_permutation(segs.begin(), segs.end()));
    }
    std::sort(set.items.begin(), set.items.end());
    return set;
}

Rational brute_expected_D(const ArrangementSet& set) {
    if (set.items.empty()) fail(ErrorKind::invalid_argument, "empty arrangement set");
    BigCount total = 0;
    for (const Arrangement& arr : set.items) total += sum_edge_lengths(set.tree, arr);
    return make_rational(total, BigCount(static_cast<unsigned long>(set.items.size())));
}

ChiSquareResult chi_square_gof(std::span<const std::int64_t> counts,
                               std::span<const double> probabilities, double alpha) {
    if (counts.empty() || counts.size() != probabilities.size())
        fail(ErrorKind::invalid_argument, "counts and probabilities must align and be nonempty");
    std::int64_t total = 0;
    for (std::int64_t c : counts) total += c;
    if (total <= 0) fail(ErrorKind::invalid_argument, "total count must be positive");

    double statistic = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        double expected = static_cast<double>(total) * probabilities[i];
        if (expected <= 0)
            fail(ErrorKind::invalid_argument, "every cell needs positive expected count");
        double diff = static_cast<double>(counts[i]) - expected;
        statistic += diff * diff / expected;
    }
    int df = static_cast<int>(counts.size()) - 1;
    double critical = chi_square_critical_value(df, alpha);
    return {statistic, critical, df, statistic < critical};
}

ChiSquareResult chi_square_uniformity(std::span<const std::int64_t> counts, std::int64_t total,
                                      double alpha) {
    if (counts.empty()) fail(ErrorKind::invalid_argument, "empty count vector");
    std::int64_t seen = 0;
    for (std::int64_t c : counts) seen += c;
    if (seen != total)
        fail(ErrorKind::invalid_argument, "counts sum to " + std::to_string(seen) +
                                              ", expected " + std::to_string(total));
    std::vector<double> probabilities(counts.size(), 1.0 / static_cast<double>(counts.size()));
    return chi_square_gof(counts, probabilities, alpha);
}

}  // namespace treeline
