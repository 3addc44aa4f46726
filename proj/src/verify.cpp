#include "treeline/verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "treeline/counting.hpp"
#include "treeline/error.hpp"
#include "treeline/expectations.hpp"
#include "treeline/sampling.hpp"

namespace treeline {

void Checks::expect(bool condition, const std::string& what) {
    ++performed;
    if (!condition) failures.push_back(what);
}

void for_each_labeled_tree(Vertex n, const std::function<void(const FreeTree&)>& visit) {
    if (n <= 2) {
        visit(from_pruefer(n, {}));
        return;
    }
    std::vector<Vertex> sequence(static_cast<std::size_t>(n) - 2, 0);
    for (;;) {
        visit(from_pruefer(n, sequence));
        std::size_t slot = sequence.size();
        while (slot > 0) {
            --slot;
            if (++sequence[slot] < n) break;
            sequence[slot] = 0;
        }
        bool rolled_over = true;
        for (Vertex v : sequence)
            if (v != 0) rolled_over = false;
        if (rolled_over) break;
    }
}

std::string describe(const FreeTree& tree) {
    std::vector<std::pair<Vertex, Vertex>> edges(tree.edges().begin(), tree.edges().end());
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    out << "n=" << tree.vertex_count();
    for (auto [u, v] : edges) out << ' ' << u + 1 << '-' << v + 1;
    return out.str();
}

namespace {

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

bool covers(const Arrangement& arr, Vertex root, Vertex u, Vertex v) {
    Vertex a = arr.position(u);
    Vertex b = arr.position(v);
    Vertex r = arr.position(root);
    return std::min(a, b) < r && r < std::max(a, b);
}

std::vector<char> subtree_mask(const RootedTree& tree, Vertex top) {
    std::vector<char> mask(static_cast<std::size_t>(tree.vertex_count()), 0);
    std::vector<Vertex> stack{top};
    mask[top] = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex c : tree.children(u)) {
            mask[c] = 1;
            stack.push_back(c);
        }
    }
    return mask;
}

bool is_star(const FreeTree& tree) {
    Vertex n = tree.vertex_count();
    if (n <= 2) return true;
    for (Vertex u = 0; u < n; ++u)
        if (tree.degree(u) == n - 1) return true;
    return false;
}

std::string show(const Rational& q) {
    return q.get_str();
}

}  // namespace

void check_counts_against_permutations(const FreeTree& tree, Checks& out) {
    Vertex n = tree.vertex_count();
    ArrangementSet all = enumerate_all(tree);
    std::int64_t planar_seen = 0;
    std::vector<std::int64_t> projective_seen(static_cast<std::size_t>(n), 0);
    for (const Arrangement& arr : all.items) {
        if (count_crossings(tree, arr) != 0) continue;
        ++planar_seen;
        for (Vertex root = 0; root < n; ++root) {
            bool covered = false;
            for (auto [u, v] : tree.edges())
                if (covers(arr, root, u, v)) {
                    covered = true;
                    break;
                }
            if (!covered) ++projective_seen[root];
        }
    }
    out.expect(count_planar(tree) == planar_seen,
               "planar count vs permutation filter: " + describe(tree));
    for (Vertex root = 0; root < n; ++root)
        out.expect(count_projective(root_at(tree, root)) == projective_seen[root],
                   "projective count vs permutation filter, root " + std::to_string(root + 1) +
                       ": " + describe(tree));
}

void check_counts_against_segments(const FreeTree& tree, Checks& out) {
    Vertex n = tree.vertex_count();
    ArrangementSet planar = enumerate_planar(tree);
    out.expect(count_planar(tree) == static_cast<std::int64_t>(planar.items.size()),
               "planar count vs segment enumeration: " + describe(tree));
    bool all_planar = true;
    for (const Arrangement& arr : planar.items)
        if (!is_planar(tree, arr)) all_planar = false;
    out.expect(all_planar, "segment enumeration produced a crossing: " + describe(tree));
    out.expect(std::adjacent_find(planar.items.begin(), planar.items.end()) == planar.items.end(),
               "segment enumeration repeated an arrangement: " + describe(tree));

    BigCount pinned_total = 0;
    for (Vertex root = 0; root < n; ++root) {
        RootedTree rooted = root_at(tree, root);
        ArrangementSet projective = enumerate_projective(rooted);
        BigCount expected = count_projective(rooted);
        out.expect(expected == static_cast<std::int64_t>(projective.items.size()),
                   "projective count vs segment enumeration, root " + std::to_string(root + 1) +
                       ": " + describe(tree));
        bool all_projective = true;
        std::int64_t pinned = 0;
        for (const Arrangement& arr : projective.items) {
            if (!is_projective(rooted, arr)) all_projective = false;
            if (arr.position(root) == 0) ++pinned;
        }
        out.expect(all_projective,
                   "segment enumeration produced a non-projective arrangement, root " +
                       std::to_string(root + 1) + ": " + describe(tree));

        // Pinning the root to the first position keeps exactly a
        // 1/(deg(root)+1) share of the projective arrangements.
        BigCount pinned_expected = expected / (tree.degree(root) + 1);
        out.expect(pinned_expected * (tree.degree(root) + 1) == expected,
                   "projective count not divisible by deg(root)+1: " + describe(tree));
        out.expect(pinned_expected == pinned,
                   "root-pinned projective count, root " + std::to_string(root + 1) + ": " +
                       describe(tree));
        pinned_total += pinned;

        Rational ratio = planar_projective_ratio(rooted);
        out.expect(ratio == make_rational(count_planar(tree), expected),
                   "planar/projective ratio closed form, root " + std::to_string(root + 1) +
                       ": " + describe(tree));
        out.expect(ratio >= 1, "planar/projective ratio below one: " + describe(tree));
        bool hub_star = tree.degree(root) == n - 1;
        out.expect((ratio == 1) == hub_star,
                   "ratio equals one exactly for stars rooted at the hub: " + describe(tree));
    }
    out.expect(pinned_total == count_planar(tree),
               "planar count vs sum of root-pinned projective counts: " + describe(tree));
}

void check_expectations_against_enumeration(const FreeTree& tree, Checks& out) {
    Vertex n = tree.vertex_count();
    ArrangementSet planar = enumerate_planar(tree);
    Rational brute_planar = brute_expected_D(planar);

    out.expect(expected_D_planar(tree) == brute_planar,
               "planar expectation (closed form) vs brute mean: " + describe(tree) + " got " +
                   show(expected_D_planar(tree)) + " want " + show(brute_planar));
    out.expect(expected_D_planar_naive(tree) == brute_planar,
               "planar expectation (root-pinned average) vs brute mean: " + describe(tree));
    out.expect(expected_D_planar_by_root_average(tree) == brute_planar,
               "planar expectation (edge propagation) vs brute mean: " + describe(tree));

    std::vector<Rational> all_roots = expected_D_projective_all_roots(tree);
    for (Vertex root = 0; root < n; ++root) {
        RootedTree rooted = root_at(tree, root);
        ArrangementSet projective = enumerate_projective(rooted);
        Rational brute_projective = brute_expected_D(projective);
        Rational closed = expected_D_projective(rooted);
        out.expect(closed == brute_projective,
                   "projective expectation vs brute mean, root " + std::to_string(root + 1) +
                       ": " + describe(tree) + " got " + show(closed) + " want " +
                       show(brute_projective));
        out.expect(all_roots[root] == brute_projective,
                   "propagated projective expectation, root " + std::to_string(root + 1) + ": " +
                       describe(tree));

        // Root pinned to the first position.
        BigCount pinned_sum = 0;
        std::int64_t pinned_count = 0;
        for (const Arrangement& arr : projective.items) {
            if (arr.position(root) != 0) continue;
            pinned_sum += sum_edge_lengths(tree, arr);
            ++pinned_count;
        }
        Rational brute_pinned = make_rational(pinned_sum, pinned_count);
        out.expect(expected_D_projective_root_fixed(rooted) == brute_pinned,
                   "root-pinned projective expectation, root " + std::to_string(root + 1) + ": " +
                       describe(tree) + " got " + show(expected_D_projective_root_fixed(rooted)) +
                       " want " + show(brute_pinned));

        // Anchor/coanchor decomposition for edges at the root: the length of
        // edge (root, child) is 1 + vertices of the child's subtree strictly
        // between (anchor - 1) + outside vertices strictly between (coanchor).
        for (Vertex child : rooted.children(root)) {
            std::vector<char> mask = subtree_mask(rooted, child);
            BigCount anchor_sum = 0, coanchor_sum = 0, coanchor_pinned_sum = 0;
            for (const Arrangement& arr : projective.items) {
                Vertex lo = std::min(arr.position(root), arr.position(child));
                Vertex hi = std::max(arr.position(root), arr.position(child));
                std::int64_t inside = 0, outside = 0;
                for (Vertex x = 0; x < n; ++x) {
                    if (x == root || x == child) continue;
                    if (arr.position(x) <= lo || arr.position(x) >= hi) continue;
                    if (mask[x])
                        ++inside;
                    else
                        ++outside;
                }
                anchor_sum += 1 + inside;
                coanchor_sum += outside;
                if (arr.position(root) == 0) coanchor_pinned_sum += outside;
            }
            std::int64_t total = static_cast<std::int64_t>(projective.items.size());
            out.expect(expected_anchor(rooted, child) == make_rational(anchor_sum, total),
                       "anchor expectation, root " + std::to_string(root + 1) + " child " +
                           std::to_string(child + 1) + ": " + describe(tree));
            out.expect(expected_coanchor(rooted, child) == make_rational(coanchor_sum, total),
                       "coanchor expectation, root " + std::to_string(root + 1) + " child " +
                           std::to_string(child + 1) + ": " + describe(tree));
            out.expect(expected_coanchor_root_fixed(rooted, child) ==
                           make_rational(coanchor_pinned_sum, pinned_count),
                       "root-pinned coanchor expectation, root " + std::to_string(root + 1) +
                           " child " + std::to_string(child + 1) + ": " + describe(tree));
            out.expect(expected_coanchor_root_fixed(rooted, child) ==
                           expected_coanchor(rooted, child) * make_rational(3, 2),
                       "pinned coanchor is 3/2 of the free one: " + describe(tree));
        }
    }
}

void check_edge_length_decomposition(const FreeTree& tree, Checks& out) {
    ArrangementSet planar = enumerate_planar(tree);
    DirectionalSizes sizes(tree);
    Rational total = 0;
    std::int64_t items = static_cast<std::int64_t>(planar.items.size());
    for (auto [u, v] : tree.edges()) {
        BigCount length_sum = 0;
        for (const Arrangement& arr : planar.items)
            length_sum += std::abs(static_cast<std::int64_t>(arr.position(u)) - arr.position(v));
        Rational brute = make_rational(length_sum, items);
        Rational closed = expected_edge_length_planar(tree, sizes, u, v);
        out.expect(closed == brute, "planar edge length, edge " + std::to_string(u + 1) + "-" +
                                        std::to_string(v + 1) + ": " + describe(tree) + " got " +
                                        show(closed) + " want " + show(brute));
        total += closed;
    }
    if (tree.vertex_count() >= 2)
        out.expect(total == expected_D_planar(tree),
                   "edge length sum vs planar expectation: " + describe(tree));
}

void check_crossing_expectation(const FreeTree& tree, Checks& out) {
    Vertex n = tree.vertex_count();
    bool expect_undefined = is_star(tree) || n <= 3;
    bool threw = false;
    try {
        Rational value = expected_D_crossing(tree);
        Rational p_planar = prob_planar(tree);
        out.expect(expected_D_unconstrained(n) ==
                       expected_D_planar(tree) * p_planar + value * (Rational(1) - p_planar),
                   "law of total expectation: " + describe(tree));
        if (n <= EnumerationLimits{}.max_n_unconstrained) {
            BigCount crossing_sum = 0;
            std::int64_t crossing_count = 0;
            ArrangementSet all = enumerate_all(tree);
            for (const Arrangement& arr : all.items) {
                if (count_crossings(tree, arr) == 0) continue;
                crossing_sum += sum_edge_lengths(tree, arr);
                ++crossing_count;
            }
            out.expect(value == make_rational(crossing_sum, crossing_count),
                       "crossing-restricted expectation vs brute mean: " + describe(tree) +
                           " got " + show(value));
        }
    } catch (const Error& e) {
        threw = true;
        out.expect(e.kind() == ErrorKind::undefined_value,
                   "unexpected error kind from crossing expectation: " + describe(tree));
    }
    out.expect(threw == expect_undefined,
               "crossing expectation definedness (stars and n<=3 only): " + describe(tree));
}

void check_sampler_uniformity(const FreeTree& tree, std::uint64_t seed,
                              std::int64_t samples_per_cell, std::int64_t support_cap,
                              Checks& out) {
    Vertex n = tree.vertex_count();
    Rng rng(seed ^ fnv1a(describe(tree)));

    BigCount planar_count = count_planar(tree);
    if (planar_count <= support_cap) {
        ArrangementSet support = enumerate_planar(tree);
        std::vector<std::int64_t> counts(support.items.size(), 0);
        std::int64_t total = samples_per_cell * static_cast<std::int64_t>(support.items.size());
        bool inside = true;
        for (std::int64_t i = 0; i < total; ++i) {
            Arrangement arr = random_planar(tree, rng);
            auto it = std::lower_bound(support.items.begin(), support.items.end(), arr);
            if (it == support.items.end() || !(*it == arr)) {
                inside = false;
                break;
            }
            ++counts[static_cast<std::size_t>(it - support.items.begin())];
        }
        out.expect(inside, "planar sample outside the enumerated support: " + describe(tree));
        if (inside && support.items.size() > 1) {
            ChiSquareResult chi = chi_square_uniformity(counts, total);
            out.expect(chi.pass, "planar sampler uniformity: " + describe(tree) +
                                     " statistic=" + std::to_string(chi.statistic) +
                                     " critical=" + std::to_string(chi.critical_value));
        }
    }

    for (Vertex root = 0; root < n; ++root) {
        RootedTree rooted = root_at(tree, root);
        if (count_projective(rooted) > support_cap) continue;
        ArrangementSet support = enumerate_projective(rooted);
        std::vector<std::int64_t> counts(support.items.size(), 0);
        std::int64_t total = samples_per_cell * static_cast<std::int64_t>(support.items.size());
        bool inside = true;
        for (std::int64_t i = 0; i < total; ++i) {
            Arrangement arr = random_projective(rooted, rng);
            auto it = std::lower_bound(support.items.begin(), support.items.end(), arr);
            if (it == support.items.end() || !(*it == arr)) {
                inside = false;
                break;
            }
            ++counts[static_cast<std::size_t>(it - support.items.begin())];
        }
        out.expect(inside, "projective sample outside the enumerated support, root " +
                               std::to_string(root + 1) + ": " + describe(tree));
        if (inside && support.items.size() > 1) {
            ChiSquareResult chi = chi_square_uniformity(counts, total);
            out.expect(chi.pass, "projective sampler uniformity, root " +
                                     std::to_string(root + 1) + ": " + describe(tree) +
                                     " statistic=" + std::to_string(chi.statistic) +
                                     " critical=" + std::to_string(chi.critical_value));
        }
    }
}

void check_random_tree_uniformity(Vertex n, std::int64_t samples, std::uint64_t seed,
                                  Checks& out) {
    std::map<std::string, std::size_t> index;
    for_each_labeled_tree(n, [&](const FreeTree& tree) {
        std::size_t next = index.size();
        index.emplace(describe(tree), next);
    });
    std::int64_t expected_trees = 1;
    for (Vertex i = 0; i < n - 2; ++i) expected_trees *= n;
    out.expect(static_cast<std::int64_t>(index.size()) == expected_trees,
               "labeled tree family size is n^(n-2) for n=" + std::to_string(n));

    if (index.size() <= 1) return;
    std::vector<std::int64_t> counts(index.size(), 0);
    Rng rng(seed);
    for (std::int64_t i = 0; i < samples; ++i) {
        FreeTree tree = random_labeled_tree(n, rng);
        auto it = index.find(describe(tree));
        if (it == index.end()) {
            out.expect(false, "random labeled tree outside the enumerated family");
            return;
        }
        ++counts[it->second];
    }
    ChiSquareResult chi = chi_square_uniformity(counts, samples);
    out.expect(chi.pass, "random labeled tree uniformity for n=" + std::to_string(n) +
                             ": statistic=" + std::to_string(chi.statistic) +
                             " critical=" + std::to_string(chi.critical_value));
}

namespace {

FreeTree make_path_local(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return from_edge_list(n, edges);
}

FreeTree make_star_local(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 2; i <= n; ++i) edges.emplace_back(1, i);
    return from_edge_list(n, edges);
}

FreeTree make_two_hub_local(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> edges{{1, 2}};
    for (Vertex i = 3; i <= n; ++i) edges.emplace_back(i % 2 == 1 ? 1 : 2, i);
    return from_edge_list(n, edges);
}

}  // namespace

bool run_verification(const VerifyOptions& options, std::ostream& log) {
    Checks checks;
    EnumerationLimits limits;

    for (Vertex n = 1; n <= options.max_n; ++n) {
        std::int64_t trees = 0;
        std::int64_t before = checks.performed;
        for_each_labeled_tree(n, [&](const FreeTree& tree) {
            ++trees;
            check_counts_against_segments(tree, checks);
            if (n <= limits.max_n_unconstrained) check_counts_against_permutations(tree, checks);
            check_expectations_against_enumeration(tree, checks);
            check_edge_length_decomposition(tree, checks);
            check_crossing_expectation(tree, checks);
        });
        log << "n=" << n << ": swept " << trees << " labeled trees, "
            << checks.performed - before << " checks\n";
    }

    {
        std::int64_t before = checks.performed;
        for (Vertex n = 1; n <= std::min<Vertex>(options.max_n, 5); ++n)
            for_each_labeled_tree(n, [&](const FreeTree& tree) {
                check_sampler_uniformity(tree, options.seed, 200, 200, checks);
            });
        for (Vertex n = 6; n <= options.max_n; ++n) {
            check_sampler_uniformity(make_path_local(n), options.seed, 200, 200, checks);
            check_sampler_uniformity(make_star_local(n), options.seed, 200, 200, checks);
            check_sampler_uniformity(make_two_hub_local(n), options.seed, 200, 200, checks);
        }
        log << "sampler uniformity: " << checks.performed - before << " checks\n";
    }

    if (options.max_n >= 5) {
        std::int64_t before = checks.performed;
        check_random_tree_uniformity(5, 30000, options.seed + 1, checks);
        log << "random tree uniformity: " << checks.performed - before << " checks\n";
    }

    if (options.inject_fault)
        checks.expect(false, "fault injection self-test: deliberate failure requested");

    log << "total: " << checks.performed << " checks, " << checks.failures.size()
        << " failures\n";
    std::size_t shown = 0;
    for (const std::string& failure : checks.failures) {
        if (shown++ == 25) {
            log << "  ... " << checks.failures.size() - 25 << " more\n";
            break;
        }
        log << "  FAIL " << failure << '\n';
    }
    return checks.ok();
}

}  // namespace treeline
