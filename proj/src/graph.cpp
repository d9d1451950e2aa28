#include "pcg/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pcg {

Graph::Graph(std::vector<NodeName> names, std::vector<std::uint8_t> adjacency)
    : names_(std::move(names)), adj_(std::move(adjacency)) {
    const std::size_t n = names_.size();
    if (adj_.size() != n * n) {
        throw std::invalid_argument("adjacency matrix has wrong size");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!index_.emplace(names_[i], i).second) {
            throw std::invalid_argument("duplicate node name '" + names_[i] + "'");
        }
        if (adj_[i * n + i] != 0) {
            throw std::invalid_argument("self-loop at '" + names_[i] + "'");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if ((adj_[i * n + j] != 0) != (adj_[j * n + i] != 0)) {
                throw std::invalid_argument("adjacency matrix is not symmetric");
            }
            if (adj_[i * n + j] != 0) {
                ++edge_count_;
            }
        }
    }
}

std::optional<std::size_t> Graph::index_of(const NodeName& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool Graph::adjacent(const NodeName& u, const NodeName& v) const {
    auto i = index_of(u);
    auto j = index_of(v);
    return i && j && adjacent(*i, *j);
}

std::size_t Graph::degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < size(); ++j) {
        d += adjacent(i, j) ? 1 : 0;
    }
    return d;
}

std::vector<NamePair> Graph::edges() const {
    std::vector<NamePair> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (adjacent(i, j)) {
                const auto& a = names_[i];
                const auto& b = names_[j];
                out.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.size() != b.size() || a.edge_count_ != b.edge_count_) {
        return false;
    }
    std::vector<std::size_t> to_b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto j = b.index_of(a.names_[i]);
        if (!j) {
            return false;
        }
        to_b[i] = *j;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a.adjacent(i, j) != b.adjacent(to_b[i], to_b[j])) {
                return false;
            }
        }
    }
    return true;
}

Graph graph_from_edges(std::vector<NodeName> names, const std::vector<NamePair>& edges) {
    const std::size_t n = names.size();
    std::unordered_map<NodeName, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        if (!index.emplace(names[i], i).second) {
            throw std::invalid_argument("duplicate node name '" + names[i] + "'");
        }
    }
    std::vector<std::uint8_t> adj(n * n, 0);
    for (const auto& [u, v] : edges) {
        auto iu = index.find(u);
        auto iv = index.find(v);
        if (iu == index.end()) {
            throw std::invalid_argument("unknown edge endpoint '" + u + "'");
        }
        if (iv == index.end()) {
            throw std::invalid_argument("unknown edge endpoint '" + v + "'");
        }
        if (iu->second == iv->second) {
            throw std::invalid_argument("self-loop at '" + u + "'");
        }
        adj[iu->second * n + iv->second] = 1;
        adj[iv->second * n + iu->second] = 1;
    }
    return Graph(std::move(names), std::move(adj));
}

std::vector<NodeName> numbered_names(std::size_t n) {
    std::vector<NodeName> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back(std::to_string(i));
    }
    return names;
}

Graph graph_h() {
    // One matching edge inside each quadruple, complete bipartite between them.
    std::vector<NamePair> edges = {{"1", "2"}, {"3", "4"}, {"5", "6"}, {"7", "8"}};
    for (const char* i : {"1", "2", "7", "8"}) {
        for (const char* j : {"3", "4", "5", "6"}) {
            edges.emplace_back(i, j);
        }
    }
    return graph_from_edges(numbered_names(8), edges);
}

Graph complete_graph(std::vector<NodeName> names) {
    const std::size_t n = names.size();
    std::vector<std::uint8_t> adj(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        adj[i * n + i] = 0;
    }
    return Graph(std::move(names), std::move(adj));
}

Graph empty_graph(std::vector<NodeName> names) {
    const std::size_t n = names.size();
    return Graph(std::move(names), std::vector<std::uint8_t>(n * n, 0));
}

Graph complement(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::uint8_t> adj(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            adj[i * n + j] = (i != j && !g.adjacent(i, j)) ? 1 : 0;
        }
    }
    return Graph(g.nodes(), std::move(adj));
}

namespace {

// Backtracking matcher over index-based adjacency. Nodes of the first graph are
// placed in an order that keeps each new node adjacent to earlier ones when
// possible, so the consistency check prunes early.
class IsoSearch {
public:
    IsoSearch(std::size_t n, std::function<bool(std::size_t, std::size_t)> adj_a,
              std::function<bool(std::size_t, std::size_t)> adj_b)
        : n_(n), adj_a_(std::move(adj_a)), adj_b_(std::move(adj_b)), map_(n), used_(n, 0) {
        deg_a_.assign(n, 0);
        deg_b_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    deg_a_[i] += adj_a_(i, j) ? 1 : 0;
                    deg_b_[i] += adj_b_(i, j) ? 1 : 0;
                }
            }
        }
        order_.reserve(n);
        std::vector<char> placed(n, 0);
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t best = n;
            std::size_t best_links = 0;
            for (std::size_t v = 0; v < n; ++v) {
                if (placed[v]) {
                    continue;
                }
                std::size_t links = 0;
                for (std::size_t u : order_) {
                    links += adj_a_(u, v) ? 1 : 0;
                }
                if (best == n || links > best_links ||
                    (links == best_links && deg_a_[v] > deg_a_[best])) {
                    best = v;
                    best_links = links;
                }
            }
            placed[best] = 1;
            order_.push_back(best);
        }
    }

    bool degree_sequences_match() const {
        auto a = deg_a_;
        auto b = deg_b_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    // Calls `found` for each isomorphism; stops when it returns false.
    void run(const std::function<bool(const std::vector<std::size_t>&)>& found) {
        found_ = &found;
        stop_ = false;
        extend(0);
    }

private:
    void extend(std::size_t depth) {
        if (depth == n_) {
            stop_ = !(*found_)(map_);
            return;
        }
        const std::size_t v = order_[depth];
        for (std::size_t w = 0; w < n_ && !stop_; ++w) {
            if (used_[w] || deg_a_[v] != deg_b_[w]) {
                continue;
            }
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const std::size_t u = order_[k];
                ok = adj_a_(u, v) == adj_b_(map_[u], w);
            }
            if (!ok) {
                continue;
            }
            map_[v] = w;
            used_[w] = 1;
            extend(depth + 1);
            used_[w] = 0;
        }
    }

    std::size_t n_;
    std::function<bool(std::size_t, std::size_t)> adj_a_;
    std::function<bool(std::size_t, std::size_t)> adj_b_;
    std::vector<std::size_t> deg_a_, deg_b_, order_, map_;
    std::vector<char> used_;
    const std::function<bool(const std::vector<std::size_t>&)>* found_ = nullptr;
    bool stop_ = false;
};

}  // namespace

std::optional<NodeMapping> are_isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) {
        return std::nullopt;
    }
    IsoSearch search(
        a.size(), [&](std::size_t i, std::size_t j) { return a.adjacent(i, j); },
        [&](std::size_t i, std::size_t j) { return b.adjacent(i, j); });
    if (!search.degree_sequences_match()) {
        return std::nullopt;
    }
    std::optional<NodeMapping> result;
    search.run([&](const std::vector<std::size_t>& perm) {
        NodeMapping m;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            m.emplace(a.name(i), b.name(perm[i]));
        }
        result = std::move(m);
        return false;
    });
    return result;
}

bool is_isomorphism(const Graph& a, const Graph& b, const NodeMapping& mapping) {
    if (a.size() != b.size() || mapping.size() != a.size()) {
        return false;
    }
    std::vector<std::size_t> image(a.size());
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto it = mapping.find(a.name(i));
        if (it == mapping.end()) {
            return false;
        }
        auto j = b.index_of(it->second);
        if (!j || !seen.insert(*j).second) {
            return false;
        }
        image[i] = *j;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a.adjacent(i, j) != b.adjacent(image[i], image[j])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<std::size_t>> automorphisms(const Graph& g) {
    std::vector<std::vector<std::size_t>> out;
    IsoSearch search(
        g.size(), [&](std::size_t i, std::size_t j) { return g.adjacent(i, j); },
        [&](std::size_t i, std::size_t j) { return g.adjacent(i, j); });
    search.run([&](const std::vector<std::size_t>& perm) {
        out.push_back(perm);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

void enumerate_graphs(std::size_t n, const std::function<bool(const Graph&)>& visit, std::size_t limit) {
    if (n > limit) {
        throw std::invalid_argument("graph enumeration limited to n <= " + std::to_string(limit));
    }
    if (n > 11) {
        throw std::invalid_argument("graph enumeration cannot index more than 55 node pairs");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    using Rows = std::vector<std::uint16_t>;
    // Bucket representatives by an isomorphism invariant: per node, its degree
    // and the sorted degrees of its neighbours.
    std::map<std::vector<std::vector<std::size_t>>, std::vector<Rows>> buckets;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    Rows rows(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(rows.begin(), rows.end(), 0);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (mask >> k & 1U) {
                rows[pairs[k].first] |= static_cast<std::uint16_t>(1U << pairs[k].second);
                rows[pairs[k].second] |= static_cast<std::uint16_t>(1U << pairs[k].first);
            }
        }
        std::vector<std::size_t> deg(n);
        for (std::size_t i = 0; i < n; ++i) {
            deg[i] = static_cast<std::size_t>(__builtin_popcount(rows[i]));
        }
        std::vector<std::vector<std::size_t>> key(n);
        for (std::size_t i = 0; i < n; ++i) {
            key[i].push_back(deg[i]);
            std::vector<std::size_t> nb;
            for (std::size_t j = 0; j < n; ++j) {
                if (rows[i] >> j & 1U) {
                    nb.push_back(deg[j]);
                }
            }
            std::sort(nb.begin(), nb.end());
            key[i].insert(key[i].end(), nb.begin(), nb.end());
        }
        std::sort(key.begin(), key.end());
        auto& reps = buckets[key];
        bool seen = false;
        for (const Rows& rep : reps) {
            IsoSearch search(
                n, [&](std::size_t i, std::size_t j) { return (rows[i] >> j & 1U) != 0; },
                [&](std::size_t i, std::size_t j) { return (rep[i] >> j & 1U) != 0; });
            search.run([&](const std::vector<std::size_t>&) {
                seen = true;
                return false;
            });
            if (seen) {
                break;
            }
        }
        if (seen) {
            continue;
        }
        reps.push_back(rows);
        std::vector<std::uint8_t> adj(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                adj[i * n + j] = (rows[i] >> j & 1U) ? 1 : 0;
            }
        }
        if (!visit(Graph(numbered_names(n), std::move(adj)))) {
            return;
        }
    }
}

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t limit) {
    std::vector<Graph> out;
    enumerate_graphs(
        n,
        [&](const Graph& g) {
            out.push_back(g);
            return true;
        },
        limit);
    return out;
}

}  // namespace pcg
