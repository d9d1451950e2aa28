#pragma once

#include "pcg/graph.hpp"
#include "pcg/tree.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace pcg::testing {

inline Rational random_weight(std::mt19937_64& rng, bool allow_zero = false) {
    std::uniform_int_distribution<long> den(1, 6);
    const long q = den(rng);
    std::uniform_int_distribution<long> num(allow_zero ? 0 : 1, 5 * q);
    Rational r(num(rng), q);
    r.canonicalize();
    return r;
}

// Random tree: `internal` unlabeled nodes joined by random attachment with
// degree at most `max_degree`, then `leaves` labeled leaves "a0".. hung on
// nodes that still have room. Degree-1 internal nodes are possible and stay
// unlabeled.
inline WeightedTree random_tree(std::mt19937_64& rng, std::size_t internal, std::size_t leaves,
                                std::size_t max_degree, bool allow_zero = false) {
    std::vector<std::string> nodes;
    std::vector<TreeEdge> edges;
    std::vector<std::size_t> degree;
    auto pick_open = [&](std::size_t limit) {
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < limit; ++i) {
            if (degree[i] < max_degree) {
                open.push_back(i);
            }
        }
        return open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    };
    for (std::size_t i = 0; i < internal; ++i) {
        nodes.push_back("u" + std::to_string(i));
        degree.push_back(0);
        if (i > 0) {
            const std::size_t p = pick_open(i);
            edges.push_back({p, i, random_weight(rng, allow_zero)});
            ++degree[p];
            ++degree[i];
        }
    }
    std::vector<std::pair<std::size_t, NodeName>> flagged;
    for (std::size_t k = 0; k < leaves; ++k) {
        const std::size_t p = pick_open(internal);
        nodes.push_back("t" + std::to_string(k));
        edges.push_back({p, nodes.size() - 1, random_weight(rng, allow_zero)});
        ++degree[p];
        degree.push_back(1);
        flagged.emplace_back(nodes.size() - 1, "a" + std::to_string(k));
    }
    return WeightedTree::build(std::move(nodes), std::move(edges), flagged);
}

// Path sums by walking parent pointers; independent of leaf_distance_matrix.
inline Rational path_length(const WeightedTree& t, std::size_t from, std::size_t to) {
    std::vector<std::size_t> parent(t.node_count(), t.node_count());
    std::vector<Rational> up(t.node_count());
    std::vector<std::size_t> order{from};
    parent[from] = from;
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (auto [y, e] : t.neighbours(order[k])) {
            if (parent[y] == t.node_count()) {
                parent[y] = order[k];
                up[y] = t.edges()[e].weight;
                order.push_back(y);
            }
        }
    }
    Rational sum = 0;
    for (std::size_t x = to; x != from; x = parent[x]) {
        sum += up[x];
    }
    return sum;
}

// Canonical form by trying every relabeling; only for tiny n.
inline std::vector<std::uint8_t> brute_canonical(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best;
    do {
        std::vector<std::uint8_t> cur(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                cur[perm[i] * n + perm[j]] = g.adjacent(i, j) ? 1 : 0;
            }
        }
        if (best.empty() || cur < best) {
            best = std::move(cur);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Number of isomorphism classes on n nodes by brute force over all labeled graphs.
inline std::size_t brute_class_count(std::size_t n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::set<std::vector<std::uint8_t>> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        std::vector<NamePair> edges;
        std::size_t bit = 0;
        const auto names = numbered_names(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j, ++bit) {
                if (mask >> bit & 1U) {
                    edges.emplace_back(names[i], names[j]);
                }
            }
        }
        seen.insert(brute_canonical(graph_from_edges(names, edges)));
    }
    return seen.size();
}

inline WeightedTree unit_star(std::size_t leaves) {
    std::vector<std::string> nodes{"c"};
    std::vector<TreeEdge> edges;
    std::vector<std::pair<std::size_t, NodeName>> flagged;
    for (std::size_t i = 0; i < leaves; ++i) {
        nodes.push_back("s" + std::to_string(i));
        edges.push_back({0, i + 1, Rational(1)});
        flagged.emplace_back(i + 1, std::string(1, static_cast<char>('a' + i)));
    }
    return WeightedTree::build(std::move(nodes), std::move(edges), flagged);
}

}  // namespace pcg::testing
