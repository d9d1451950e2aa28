#include "pcg/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace pcg {

WeightedTree WeightedTree::build(std::vector<std::string> nodes, const std::vector<EdgeSpec>& edges,
                                 const std::vector<LeafSpec>& leaves) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!index.emplace(nodes[i], i).second) {
            throw std::invalid_argument("duplicate tree node '" + nodes[i] + "'");
        }
    }
    auto lookup = [&](const std::string& name, const char* what) {
        auto it = index.find(name);
        if (it == index.end()) {
            throw std::invalid_argument(std::string(what) + " references unknown node '" + name + "'");
        }
        return it->second;
    };
    std::vector<TreeEdge> indexed;
    indexed.reserve(edges.size());
    for (const auto& e : edges) {
        indexed.push_back({lookup(e.u, "tree edge"), lookup(e.v, "tree edge"), e.weight});
    }
    std::vector<std::pair<std::size_t, NodeName>> flagged;
    flagged.reserve(leaves.size());
    for (const auto& leaf : leaves) {
        flagged.emplace_back(lookup(leaf.tree_node, "leaf"), leaf.graph_node);
    }
    return build(std::move(nodes), std::move(indexed), flagged);
}

WeightedTree WeightedTree::build(std::vector<std::string> nodes, std::vector<TreeEdge> edges,
                                 const std::vector<std::pair<std::size_t, NodeName>>& leaves) {
    WeightedTree t;
    if (nodes.empty()) {
        throw std::invalid_argument("tree has no nodes");
    }
    if (edges.size() + 1 != nodes.size()) {
        throw std::invalid_argument("a tree on " + std::to_string(nodes.size()) + " nodes needs " +
                                    std::to_string(nodes.size() - 1) + " edges, got " +
                                    std::to_string(edges.size()));
    }
    t.adj_.resize(nodes.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto& e = edges[k];
        if (e.u >= nodes.size() || e.v >= nodes.size()) {
            throw std::invalid_argument("tree edge references node index out of range");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("tree edge is a self-loop at '" + nodes[e.u] + "'");
        }
        if (sgn(e.weight) < 0) {
            throw std::invalid_argument("negative weight on tree edge " + nodes[e.u] + "-" + nodes[e.v]);
        }
        t.adj_[e.u].emplace_back(e.v, k);
        t.adj_[e.v].emplace_back(e.u, k);
    }
    t.edges_ = std::move(edges);
    // n-1 edges plus connectivity implies acyclic.
    std::vector<char> seen(nodes.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (auto [y, k] : t.adj_[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    if (reached != nodes.size()) {
        throw std::invalid_argument("tree edges do not connect all nodes");
    }
    std::unordered_set<NodeName> labels;
    for (const auto& [x, label] : leaves) {
        if (x >= nodes.size()) {
            throw std::invalid_argument("leaf references node index out of range");
        }
        if (t.adj_[x].size() != 1 && nodes.size() != 1) {
            throw std::invalid_argument("flagged leaf '" + nodes[x] + "' does not have degree 1");
        }
        if (!labels.insert(label).second) {
            throw std::invalid_argument("graph node '" + label + "' labels two leaves");
        }
        if (!t.leaf_slot_.emplace(x, t.leaf_nodes_.size()).second) {
            throw std::invalid_argument("tree node '" + nodes[x] + "' flagged twice");
        }
        t.leaf_nodes_.push_back(x);
        t.leaf_names_.push_back(label);
    }
    t.names_ = std::move(nodes);
    return t;
}

std::optional<NodeName> WeightedTree::leaf_label(std::size_t tree_node) const {
    auto it = leaf_slot_.find(tree_node);
    if (it == leaf_slot_.end()) {
        return std::nullopt;
    }
    return leaf_names_[it->second];
}

WeightedTree WeightedTree::scaled(const Rational& factor) const {
    if (sgn(factor) <= 0) {
        throw std::invalid_argument("scale factor must be positive");
    }
    WeightedTree t = *this;
    for (auto& e : t.edges_) {
        e.weight *= factor;
    }
    return t;
}

void validate_witness(const PCGWitness& w) {
    if (sgn(w.dmin) < 0 || sgn(w.dmax) < 0) {
        throw std::invalid_argument("witness bounds must be nonnegative");
    }
}

const Rational& DistanceMatrix::at(const NodeName& u, const NodeName& v) const {
    auto pos = [&](const NodeName& x) {
        auto it = std::find(names_.begin(), names_.end(), x);
        if (it == names_.end()) {
            throw std::out_of_range("no leaf named '" + x + "'");
        }
        return static_cast<std::size_t>(it - names_.begin());
    };
    return at(pos(u), pos(v));
}

Rational DistanceMatrix::max_entry() const {
    Rational best = 0;
    for (const auto& x : entries_) {
        if (x > best) {
            best = x;
        }
    }
    return best;
}

DistanceMatrix leaf_distance_matrix(const WeightedTree& tree) {
    const std::size_t n = tree.node_count();
    const auto& leaves = tree.leaves();
    const std::size_t m = leaves.size();
    std::vector<Rational> entries(m * m);
    if (m < 2) {
        return DistanceMatrix(tree.leaf_names(), std::move(entries));
    }

    // Keep only the subtree spanned by the flagged leaves.
    std::vector<char> flagged(n, 0);
    for (std::size_t x : leaves) {
        flagged[x] = 1;
    }
    std::vector<std::size_t> live_degree(n);
    std::vector<char> kept(n, 1);
    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x) {
        live_degree[x] = tree.degree(x);
        if (!flagged[x] && live_degree[x] <= 1) {
            queue.push_back(x);
        }
    }
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        if (!kept[x]) {
            continue;
        }
        kept[x] = 0;
        for (auto [y, k] : tree.neighbours(x)) {
            if (kept[y] && --live_degree[y] <= 1 && !flagged[y]) {
                queue.push_back(y);
            }
        }
    }

    // Contract chains of degree-2 nodes so long caterpillar spines cost one
    // pass rather than one pass per leaf.
    std::vector<std::size_t> key_id(n, n);
    std::vector<std::size_t> keys;
    for (std::size_t x = 0; x < n; ++x) {
        if (kept[x] && (flagged[x] || live_degree[x] != 2)) {
            key_id[x] = keys.size();
            keys.push_back(x);
        }
    }
    // Each chain is walked once; runs of equal weights are summed as count * weight.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> reduced(keys.size());
    std::vector<char> walked(tree.edges().size(), 0);
    for (std::size_t a = 0; a < keys.size(); ++a) {
        for (auto [first, k0] : tree.neighbours(keys[a])) {
            if (!kept[first] || walked[k0]) {
                continue;
            }
            walked[k0] = 1;
            Rational length = 0;
            const Rational* run_weight = &tree.edges()[k0].weight;
            unsigned long run = 1;
            std::size_t prev = keys[a];
            std::size_t cur = first;
            std::size_t last = k0;
            while (key_id[cur] == n) {
                for (auto [y, k] : tree.neighbours(cur)) {
                    if (kept[y] && y != prev) {
                        const Rational& w = tree.edges()[k].weight;
                        if (w == *run_weight) {
                            ++run;
                        } else {
                            length += *run_weight * run;
                            run_weight = &w;
                            run = 1;
                        }
                        prev = cur;
                        cur = y;
                        last = k;
                        break;
                    }
                }
            }
            length += *run_weight * run;
            walked[last] = 1;
            reduced[key_id[cur]].emplace_back(a, length);
            reduced[a].emplace_back(key_id[cur], std::move(length));
        }
    }

    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rational> dist(keys.size());
        std::vector<char> seen(keys.size(), 0);
        std::vector<std::size_t> stack{key_id[leaves[i]]};
        seen[stack.back()] = 1;
        while (!stack.empty()) {
            const std::size_t a = stack.back();
            stack.pop_back();
            for (const auto& [b, w] : reduced[a]) {
                if (!seen[b]) {
                    seen[b] = 1;
                    dist[b] = dist[a] + w;
                    stack.push_back(b);
                }
            }
        }
        for (std::size_t j = 0; j < m; ++j) {
            entries[i * m + j] = i == j ? Rational(0) : dist[key_id[leaves[j]]];
        }
    }
    return DistanceMatrix(tree.leaf_names(), std::move(entries));
}

namespace {

template <class Pred>
Graph graph_from_distances(const DistanceMatrix& d, Pred is_edge) {
    const std::size_t m = d.size();
    std::vector<std::uint8_t> adj(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (is_edge(d.at(i, j))) {
                adj[i * m + j] = adj[j * m + i] = 1;
            }
        }
    }
    return Graph(d.names(), std::move(adj));
}

}  // namespace

Graph pcg_eval(const WeightedTree& tree, const Rational& dmin, const Rational& dmax) {
    return graph_from_distances(leaf_distance_matrix(tree),
                                [&](const Rational& x) { return dmin <= x && x <= dmax; });
}

Graph pcg_eval(const PCGWitness& witness) {
    return pcg_eval(witness.tree, witness.dmin, witness.dmax);
}

Graph mlpg_eval(const WeightedTree& tree, const Rational& dmin) {
    return graph_from_distances(leaf_distance_matrix(tree), [&](const Rational& x) { return x >= dmin; });
}

bool is_caterpillar(const WeightedTree& tree) {
    for (std::size_t x = 0; x < tree.node_count(); ++x) {
        if (tree.degree(x) <= 1) {
            continue;
        }
        std::size_t spine_neighbours = 0;
        for (auto [y, k] : tree.neighbours(x)) {
            spine_neighbours += tree.degree(y) > 1 ? 1 : 0;
        }
        if (spine_neighbours > 2) {
            return false;
        }
    }
    return true;
}

WeightedTree normalize_tree(const WeightedTree& tree) {
    if (tree.leaves().size() < 2) {
        throw std::invalid_argument("normalize_tree needs at least two leaves");
    }
    const std::size_t n0 = tree.node_count();
    std::vector<std::string> names = tree.node_names();
    std::vector<std::map<std::size_t, Rational>> adj(n0);
    for (const auto& e : tree.edges()) {
        adj[e.u][e.v] = e.weight;
        adj[e.v][e.u] = e.weight;
    }
    std::vector<char> flagged(n0, 0);
    for (std::size_t x : tree.leaves()) {
        flagged[x] = 1;
    }
    std::vector<char> alive(n0, 1);

    auto remove_node = [&](std::size_t x) {
        for (const auto& [y, w] : adj[x]) {
            adj[y].erase(x);
        }
        adj[x].clear();
        alive[x] = 0;
    };

    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < n0; ++x) {
        if (!flagged[x] && adj[x].size() <= 1) {
            queue.push_back(x);
        }
    }
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        if (!alive[x]) {
            continue;
        }
        std::vector<std::size_t> nbrs;
        for (const auto& [y, w] : adj[x]) {
            nbrs.push_back(y);
        }
        remove_node(x);
        for (std::size_t y : nbrs) {
            if (!flagged[y] && adj[y].size() <= 1) {
                queue.push_back(y);
            }
        }
    }

    for (std::size_t x = 0; x < n0; ++x) {
        if (alive[x] && !flagged[x] && adj[x].size() == 2) {
            auto it = adj[x].begin();
            const std::size_t a = it->first;
            Rational w = it->second;
            ++it;
            const std::size_t b = it->first;
            w += it->second;
            remove_node(x);
            adj[a][b] = w;
            adj[b][a] = w;
        }
    }

    std::set<std::string> used(names.begin(), names.end());
    auto fresh_name = [&](const std::string& base) {
        for (std::size_t k = 1;; ++k) {
            std::string candidate = base + "_" + std::to_string(k);
            if (used.insert(candidate).second) {
                return candidate;
            }
        }
    };
    auto add_node = [&](const std::string& base) {
        names.push_back(fresh_name(base));
        adj.emplace_back();
        alive.push_back(1);
        flagged.push_back(0);
        return names.size() - 1;
    };

    const std::size_t leaf_count = tree.leaves().size();
    if (leaf_count == 2) {
        const std::size_t a = tree.leaves()[0];
        const std::size_t b = tree.leaves()[1];
        const Rational w = adj[a].at(b);
        adj[a].erase(b);
        adj[b].erase(a);
        const std::size_t z = add_node("mid");
        adj[a][z] = adj[z][a] = w;
        adj[b][z] = adj[z][b] = Rational(0);
    } else {
        for (std::size_t x = 0; x < names.size(); ++x) {
            while (alive[x] && !flagged[x] && adj[x].size() > 3) {
                // Keep two neighbours here; move the rest behind a zero edge.
                const std::size_t y = add_node(names[x]);
                std::vector<std::pair<std::size_t, Rational>> moved(std::next(adj[x].begin(), 2), adj[x].end());
                for (const auto& [z, w] : moved) {
                    adj[x].erase(z);
                    adj[z].erase(x);
                    adj[y][z] = w;
                    adj[z][y] = w;
                }
                adj[x][y] = adj[y][x] = Rational(0);
                // y now has moved.size() + 1 neighbours; the loop revisits it.
            }
        }
    }

    std::vector<std::string> out_nodes;
    std::vector<std::size_t> remap(names.size(), names.size());
    for (std::size_t x = 0; x < names.size(); ++x) {
        if (alive[x]) {
            remap[x] = out_nodes.size();
            out_nodes.push_back(names[x]);
        }
    }
    std::vector<WeightedTree::EdgeSpec> out_edges;
    for (std::size_t x = 0; x < names.size(); ++x) {
        for (const auto& [y, w] : adj[x]) {
            if (alive[x] && x < y) {
                out_edges.push_back({names[x], names[y], w});
            }
        }
    }
    std::vector<WeightedTree::LeafSpec> out_leaves;
    for (std::size_t i = 0; i < tree.leaves().size(); ++i) {
        out_leaves.push_back({names[tree.leaves()[i]], tree.leaf_names()[i]});
    }
    return WeightedTree::build(std::move(out_nodes), out_edges, out_leaves);
}

}  // namespace pcg
