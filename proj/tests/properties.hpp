#pragma once

#include "pcg/random_instances.hpp"
#include "pcg/threshold_tolerance.hpp"
#include "support.hpp"

namespace pcg::testing {

struct Tally {
    std::size_t cases = 0;
    std::size_t failures = 0;
    void record(bool ok) {
        ++cases;
        failures += ok ? 0 : 1;
    }
    bool ok() const { return cases > 0 && failures == 0; }
};

// Trees with 1..12 internal nodes of degree <= max_degree and 2..9 leaves.
inline WeightedTree property_tree(std::mt19937_64& rng, std::size_t max_degree, bool allow_zero = true) {
    std::uniform_int_distribution<std::size_t> internal(1, 12), leaves(2, 9);
    const std::size_t k = internal(rng);
    // Keep enough room for the leaves.
    const std::size_t room = k * (max_degree - 2) + 2;
    return random_tree(rng, k, std::min(leaves(rng), room), max_degree, allow_zero);
}

inline Tally four_point(std::uint64_t seed, std::size_t trees) {
    std::mt19937_64 rng(seed);
    Tally t;
    for (std::size_t i = 0; i < trees; ++i) {
        const WeightedTree tree = property_tree(rng, 6);
        const auto d = leaf_distance_matrix(tree);
        const std::size_t m = d.size();
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                for (std::size_t c = b + 1; c < m; ++c) {
                    for (std::size_t e = c + 1; e < m; ++e) {
                        std::array<Rational, 3> s{d.at(a, b) + d.at(c, e), d.at(a, c) + d.at(b, e),
                                                  d.at(a, e) + d.at(b, c)};
                        std::sort(s.begin(), s.end());
                        t.record(s[1] == s[2]);
                    }
                }
            }
        }
    }
    return t;
}

inline Tally scale_invariance(std::uint64_t seed, std::size_t trees) {
    std::mt19937_64 rng(seed);
    Tally t;
    const std::array<Rational, 2> lambdas{make_rational(1, 3), Rational(7)};
    for (std::size_t i = 0; i < trees; ++i) {
        const WeightedTree tree = property_tree(rng, 5);
        const auto d = leaf_distance_matrix(tree);
        // Bounds drawn from the realized distances so both boundaries get hit.
        std::uniform_int_distribution<std::size_t> pick(0, d.size() * d.size() - 1);
        Rational lo = d.at(pick(rng) / d.size(), pick(rng) % d.size());
        Rational hi = d.at(pick(rng) / d.size(), pick(rng) % d.size());
        if (lo > hi) {
            std::swap(lo, hi);
        }
        const Graph base = pcg_eval(tree, lo, hi);
        for (const auto& lambda : lambdas) {
            t.record(pcg_eval(tree.scaled(lambda), lo * lambda, hi * lambda) == base);
        }
    }
    return t;
}

inline Tally normalize_preserves(std::uint64_t seed, std::size_t trees) {
    std::mt19937_64 rng(seed);
    Tally t;
    for (std::size_t i = 0; i < trees; ++i) {
        const WeightedTree tree = property_tree(rng, 6);
        const WeightedTree n = normalize_tree(tree);
        bool shape = true;
        for (std::size_t x = 0; x < n.node_count(); ++x) {
            const bool leaf = n.leaf_label(x).has_value();
            shape = shape && (leaf ? n.degree(x) == 1 : (n.degree(x) == 3 || (tree.leaves().size() == 2 && n.degree(x) == 2)));
        }
        t.record(shape && leaf_distance_matrix(n) == leaf_distance_matrix(tree));
    }
    return t;
}

// Normalizing a witness with arbitrary internal degrees keeps its graph.
inline Tally binary_sufficiency(std::uint64_t seed, std::size_t trees) {
    std::mt19937_64 rng(seed);
    Tally t;
    for (std::size_t i = 0; i < trees; ++i) {
        const WeightedTree tree = property_tree(rng, 6);
        const auto d = leaf_distance_matrix(tree);
        const Rational lo = d.max_entry() / 3, hi = d.max_entry() * 2 / 3;
        t.record(pcg_eval(normalize_tree(tree), lo, hi) == pcg_eval(tree, lo, hi));
    }
    return t;
}

struct RoundTrip {
    Tally realize;      // pcg_eval(tt_witness(I)) = tt_realize(I)
    Tally caterpillar;  // witness tree is a caterpillar
    Tally formula;      // d = g(u) + g(v) + K - min(t(u), t(v)) after integerizing
    Tally lower_bound;  // every off-diagonal distance >= 2
    Tally mlpg;         // mlpg_eval(T, K) = pcg_eval(T, K, dmax)
    Tally integerized;  // tt_realize(integerize(I)) = tt_realize(I), rational instances only
    bool ok() const {
        return realize.ok() && caterpillar.ok() && formula.ok() && lower_bound.ok() && mlpg.ok() && integerized.ok();
    }
};

inline void check_instance(const TTInstance& inst, RoundTrip& out) {
    const PCGWitness w = tt_witness(inst);
    const Graph g = pcg_eval(w);
    out.realize.record(g == tt_realize(inst));
    out.caterpillar.record(is_caterpillar(w.tree));
    out.mlpg.record(mlpg_eval(w.tree, w.dmin) == g);
    const auto d = leaf_distance_matrix(w.tree);
    const TTInstance ints = integerize(inst).instance;
    const Rational k = w.dmin;
    bool formula = true, bound = true;
    for (const auto& u : ints.nodes()) {
        for (const auto& v : ints.nodes()) {
            if (u.name == v.name) {
                continue;
            }
            const Rational dist = d.at(u.name, v.name);
            formula = formula && dist == u.g + v.g + k - std::min(u.t, v.t);
            bound = bound && dist >= 2;
        }
    }
    out.formula.record(formula);
    out.lower_bound.record(bound);
}

inline RoundTrip tt_round_trip(std::uint64_t seed, std::size_t integer_instances, std::size_t rational_instances) {
    std::mt19937_64 rng(seed);
    RoundTrip out;
    for (std::size_t i = 0; i < integer_instances; ++i) {
        check_instance(random_integer_tt(rng, 3, 12, 20), out);
    }
    for (std::size_t i = 0; i < rational_instances; ++i) {
        const TTInstance inst = random_rational_tt(rng, 3, 12, 20, 12);
        check_instance(inst, out);
        out.integerized.record(tt_realize(integerize(inst).instance) == tt_realize(inst));
    }
    return out;
}

inline Tally mlpg_agreement_on_trees(std::uint64_t seed, std::size_t trees) {
    std::mt19937_64 rng(seed);
    Tally t;
    for (std::size_t i = 0; i < trees; ++i) {
        const WeightedTree tree = property_tree(rng, 4);
        const auto d = leaf_distance_matrix(tree);
        const Rational dmin = d.at(0, 1);
        t.record(mlpg_eval(tree, dmin) == pcg_eval(tree, dmin, d.max_entry()));
        t.record(mlpg_eval(tree, dmin) == pcg_eval(tree, dmin, d.max_entry() + 5));
    }
    return t;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n) {
    std::bernoulli_distribution coin(0.5);
    const auto names = numbered_names(n);
    std::vector<NamePair> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                edges.emplace_back(names[i], names[j]);
            }
        }
    }
    return graph_from_edges(names, edges);
}

// Complement is an involution; isomorphism is reflexive and symmetric, and
// returned mappings re-verify. Relabeled copies use a random permutation.
inline Tally graph_laws(std::uint64_t seed, std::size_t graphs) {
    std::mt19937_64 rng(seed);
    Tally t;
    std::uniform_int_distribution<std::size_t> size(1, 9);
    for (std::size_t i = 0; i < graphs; ++i) {
        const Graph g = random_graph(rng, size(rng));
        t.record(complement(complement(g)) == g);
        const auto self = are_isomorphic(g, g);
        t.record(self && is_isomorphism(g, g, *self));

        std::vector<NodeName> shuffled = g.nodes();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::unordered_map<NodeName, NodeName> rename;
        for (std::size_t k = 0; k < shuffled.size(); ++k) {
            rename[g.name(k)] = "r" + shuffled[k];
        }
        std::vector<NodeName> names;
        for (const auto& n : g.nodes()) {
            names.push_back(rename[n]);
        }
        std::vector<NamePair> edges;
        for (const auto& [u, v] : g.edges()) {
            edges.emplace_back(rename[u], rename[v]);
        }
        const Graph h = graph_from_edges(names, edges);
        const auto fwd = are_isomorphic(g, h);
        const auto back = are_isomorphic(h, g);
        t.record(fwd && back && is_isomorphism(g, h, *fwd) && is_isomorphism(h, g, *back));

        const Graph other = random_graph(rng, g.size());
        const bool same = brute_canonical(g) == brute_canonical(other);
        t.record(are_isomorphic(g, other).has_value() == same && are_isomorphic(other, g).has_value() == same);
    }
    return t;
}

}  // namespace pcg::testing
