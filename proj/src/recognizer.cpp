#include "pcg/recognizer.hpp"

#include "pcg/lp.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pcg {

std::uint64_t topology_count(std::size_t n) {
    if (n < 3) {
        return 0;
    }
    std::uint64_t c = 1;
    for (std::uint64_t k = 3; k <= 2 * n - 5; k += 2) {
        c *= k;
    }
    return c;
}

namespace {

void insert_leaves(Topology& t, std::size_t next_leaf, std::size_t n,
                   const std::function<bool(const Topology&)>& visit, bool& stop) {
    if (next_leaf == n) {
        stop = !visit(t);
        return;
    }
    const std::size_t internal = n + next_leaf - 2;
    const std::size_t edge_count = t.edges.size();
    for (std::size_t e = 0; e < edge_count && !stop; ++e) {
        const auto [a, b] = t.edges[e];
        t.edges[e] = {a, internal};
        t.edges.emplace_back(internal, b);
        t.edges.emplace_back(internal, next_leaf);
        insert_leaves(t, next_leaf + 1, n, visit, stop);
        t.edges.pop_back();
        t.edges.pop_back();
        t.edges[e] = {a, b};
    }
}

}  // namespace

void enumerate_topologies(std::size_t n, const std::function<bool(const Topology&)>& visit, std::size_t limit) {
    if (n < 3 || n > limit) {
        throw std::invalid_argument("topology enumeration needs 3 <= n <= " + std::to_string(limit));
    }
    Topology t;
    t.leaf_count = n;
    t.edges = {{0, n}, {1, n}, {2, n}};
    bool stop = false;
    insert_leaves(t, 3, n, visit, stop);
}

std::vector<Topology> enumerate_topologies(std::size_t n, std::size_t limit) {
    std::vector<Topology> out;
    enumerate_topologies(
        n,
        [&](const Topology& t) {
            out.push_back(t);
            return true;
        },
        limit);
    return out;
}

namespace {

std::vector<std::vector<std::size_t>> adjacency_of(const Topology& t) {
    std::vector<std::vector<std::size_t>> adj(t.node_count());
    for (const auto& [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

// Leaves reachable from `start` without crossing back over `from`.
std::uint32_t leaves_beyond(const std::vector<std::vector<std::size_t>>& adj, std::size_t n, std::size_t from,
                            std::size_t start) {
    std::uint32_t mask = 0;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{start, from}};
    while (!stack.empty()) {
        auto [x, parent] = stack.back();
        stack.pop_back();
        if (x < n) {
            mask |= std::uint32_t{1} << x;
        }
        for (std::size_t y : adj[x]) {
            if (y != parent) {
                stack.emplace_back(y, x);
            }
        }
    }
    return mask;
}

// Edge indices on the path between every pair of leaves.
std::vector<std::vector<std::size_t>> leaf_paths(const Topology& t) {
    const std::size_t n = t.leaf_count;
    const std::size_t nodes = t.node_count();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nodes);
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        adj[t.edges[e].first].emplace_back(t.edges[e].second, e);
        adj[t.edges[e].second].emplace_back(t.edges[e].first, e);
    }
    std::vector<std::vector<std::size_t>> paths(n * n);
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<std::size_t> parent_edge(nodes, std::numeric_limits<std::size_t>::max());
        std::vector<std::size_t> parent(nodes, nodes);
        std::vector<std::size_t> stack{u};
        parent[u] = u;
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (auto [y, e] : adj[x]) {
                if (parent[y] == nodes) {
                    parent[y] = x;
                    parent_edge[y] = e;
                    stack.push_back(y);
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (v == u) {
                continue;
            }
            auto& path = paths[u * n + v];
            for (std::size_t x = v; x != u; x = parent[x]) {
                path.push_back(parent_edge[x]);
            }
            std::sort(path.begin(), path.end());
        }
    }
    return paths;
}

PCGWitness assemble_witness(const Graph& g, const Topology& t, const std::vector<Rational>& x, std::size_t dmin_var,
                            std::size_t dmax_var) {
    const std::size_t n = t.leaf_count;
    auto node_name = [&](std::size_t v) { return v < n ? "l_" + g.name(v) : "v" + std::to_string(v - n); };
    std::vector<std::string> nodes;
    for (std::size_t v = 0; v < t.node_count(); ++v) {
        nodes.push_back(node_name(v));
    }
    std::vector<WeightedTree::EdgeSpec> edges;
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        edges.push_back({node_name(t.edges[e].first), node_name(t.edges[e].second), x[e]});
    }
    std::vector<WeightedTree::LeafSpec> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        leaves.push_back({node_name(v), g.name(v)});
    }
    return {WeightedTree::build(std::move(nodes), edges, leaves), x[dmin_var], x[dmax_var]};
}

}  // namespace

std::vector<std::uint32_t> split_key(const Topology& t) {
    const std::size_t n = t.leaf_count;
    const auto adj = adjacency_of(t);
    const std::uint32_t all = n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> key;
    for (const auto& [a, b] : t.edges) {
        if (a < n || b < n) {
            continue;
        }
        std::uint32_t side = leaves_beyond(adj, n, a, b);
        if (side & 1U) {
            side = all & ~side;
        }
        key.push_back(side);
    }
    std::sort(key.begin(), key.end());
    return key;
}

std::optional<PCGWitness> topology_feasible(const Graph& g, const Topology& t, bool prune, LabelingStats* stats) {
    const std::size_t n = g.size();
    if (t.leaf_count != n) {
        throw std::invalid_argument("topology has " + std::to_string(t.leaf_count) + " leaves but the graph has " +
                                    std::to_string(n) + " nodes");
    }
    using lp::Relation;
    using lp::StrictConstraint;
    const auto paths = leaf_paths(t);
    const std::size_t edge_vars = t.edges.size();
    const std::size_t dmin = edge_vars;
    const std::size_t dmax = edge_vars + 1;

    std::vector<lp::Variable> vars;
    for (std::size_t e = 0; e < edge_vars; ++e) {
        vars.push_back({"w" + std::to_string(e), true});
    }
    vars.push_back({"dmin", true});
    vars.push_back({"dmax", true});

    auto path_minus = [&](std::size_t u, std::size_t v, std::size_t bound_var) {
        lp::LinearForm f;
        for (std::size_t e : paths[u * n + v]) {
            f.push_back({e, Rational(1)});
        }
        f.push_back({bound_var, Rational(-1)});
        return f;
    };

    std::vector<StrictConstraint> base;
    std::vector<std::pair<StrictConstraint, StrictConstraint>> choices;  // (LOW, HIGH)
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) {
                base.push_back({path_minus(u, v, dmin), false, Relation::GreaterEqual, Rational(0)});
                base.push_back({path_minus(u, v, dmax), false, Relation::LessEqual, Rational(0)});
            } else {
                choices.emplace_back(StrictConstraint{path_minus(u, v, dmin), true, Relation::LessEqual, Rational(0)},
                                     StrictConstraint{path_minus(u, v, dmax), true, Relation::GreaterEqual, Rational(0)});
            }
        }
    }
    const lp::Constraint normalization{{{dmax, Rational(1)}}, Relation::Equal, Rational(1)};
    const std::size_t k = choices.size();

    // One persistent system: the base rows followed by one slot per non-edge.
    // Flipping a label swaps the slot with the stored alternative.
    std::vector<StrictConstraint> system = base;
    std::vector<StrictConstraint> alternative;
    std::vector<char> placed(k, 0);
    for (auto& [low, high] : choices) {
        system.push_back(std::move(low));
        alternative.push_back(std::move(high));
    }
    auto try_system = [&](const std::vector<char>& labels, std::size_t depth) {
        for (std::size_t i = 0; i < depth; ++i) {
            if (placed[i] != labels[i]) {
                std::swap(system[base.size() + i], alternative[i]);
                placed[i] = labels[i];
            }
        }
        if (stats) {
            ++stats->systems_solved;
        }
        return lp::strict_feasibility(vars, std::span(system.data(), base.size() + depth), normalization);
    };

    std::optional<std::vector<Rational>> found;
    std::vector<char> labels(k, 0);
    if (!prune) {
        if (k >= 63) {
            throw std::invalid_argument("too many non-edges for labeling enumeration");
        }
        const std::uint64_t total = std::uint64_t{1} << k;
        for (std::uint64_t mask = 0; mask < total && !found; ++mask) {
            for (std::size_t i = 0; i < k; ++i) {
                labels[i] = static_cast<char>(mask >> (k - 1 - i) & 1U);
            }
            found = try_system(labels, k);
        }
    } else {
        // Depth-first over label prefixes; an infeasible prefix refutes all completions.
        std::function<bool(std::size_t)> descend = [&](std::size_t depth) {
            if (depth > 0) {
                auto x = try_system(labels, depth);
                if (!x) {
                    return false;
                }
                if (depth == k) {
                    found = std::move(x);
                    return true;
                }
            } else if (k == 0) {
                found = try_system(labels, 0);
                return found.has_value();
            }
            for (char side : {char{0}, char{1}}) {
                labels[depth] = side;
                if (descend(depth + 1)) {
                    return true;
                }
            }
            return false;
        };
        descend(0);
    }
    if (!found) {
        return std::nullopt;
    }
    PCGWitness w = assemble_witness(g, t, *found, dmin, dmax);
    if (!(pcg_eval(w) == g)) {
        throw std::logic_error("recognizer produced a witness that does not realize the graph");
    }
    return w;
}

std::string RecognitionResult::certificate() const {
    std::ostringstream out;
    out << "not-pcg nodes=" << nodes << " topologies=" << topologies_examined << " labelings=" << labelings_examined;
    return out.str();
}

namespace {

PCGWitness unit_star(const Graph& g, const Rational& dmin, const Rational& dmax) {
    std::vector<std::string> nodes{"c"};
    std::vector<WeightedTree::EdgeSpec> edges;
    std::vector<WeightedTree::LeafSpec> leaves;
    for (const auto& name : g.nodes()) {
        nodes.push_back("l_" + name);
        edges.push_back({"c", nodes.back(), Rational(1)});
        leaves.push_back({nodes.back(), name});
    }
    return {WeightedTree::build(std::move(nodes), edges, leaves), dmin, dmax};
}

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto v : k) {
            h = (h ^ v) * 1099511628211ULL;
        }
        return h;
    }
};

}  // namespace

RecognitionResult recognize_pcg(const Graph& g, const RecognitionOptions& options) {
    const std::size_t n = g.size();
    if (n < 3 || n > options.limit) {
        throw std::invalid_argument("recognition needs 3 <= n <= " + std::to_string(options.limit) + ", got " +
                                    std::to_string(n));
    }
    RecognitionResult result;
    result.nodes = n;
    result.topologies_total = topology_count(n);

    const std::size_t pairs = n * (n - 1) / 2;
    if (g.edge_count() == pairs || g.edge_count() == 0) {
        // Unit star: every leaf distance is 2.
        const bool complete = g.edge_count() == pairs;
        PCGWitness w = complete ? unit_star(g, Rational(2), Rational(2)) : unit_star(g, Rational(1), Rational(1));
        if (!(pcg_eval(w) == g)) {
            throw std::logic_error("star witness does not realize the graph");
        }
        result.witness = std::move(w);
        return result;
    }

    const std::vector<Topology> topologies = enumerate_topologies(n, options.limit);
    const std::size_t total = topologies.size();

    std::vector<char> skip(total, 0);
    if (options.symmetry) {
        const auto autos = automorphisms(g);
        std::vector<std::vector<std::uint32_t>> keys(total);
        std::unordered_map<std::vector<std::uint32_t>, std::size_t, KeyHash> index;
        for (std::size_t i = 0; i < total; ++i) {
            keys[i] = split_key(topologies[i]);
            index.emplace(keys[i], i);
        }
        const std::uint32_t all = (std::uint32_t{1} << n) - 1;
        for (std::size_t i = 0; i < total && !autos.empty(); ++i) {
            for (const auto& perm : autos) {
                std::vector<std::uint32_t> image;
                image.reserve(keys[i].size());
                for (std::uint32_t split : keys[i]) {
                    std::uint32_t mapped = 0;
                    for (std::size_t leaf = 0; leaf < n; ++leaf) {
                        if (split >> leaf & 1U) {
                            mapped |= std::uint32_t{1} << perm[leaf];
                        }
                    }
                    if (mapped & 1U) {
                        mapped = all & ~mapped;
                    }
                    image.push_back(mapped);
                }
                std::sort(image.begin(), image.end());
                if (index.at(image) < i) {
                    skip[i] = 1;
                    break;
                }
            }
        }
    }

    std::vector<std::optional<PCGWitness>> witnesses(total);
    std::vector<std::uint64_t> solved(total, 0);
    std::vector<char> examined(total, 0);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{total};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        try {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= total || i > best.load()) {
                    return;
                }
                if (!skip[i]) {
                    LabelingStats stats;
                    auto w = topology_feasible(g, topologies[i], options.prune, &stats);
                    solved[i] = stats.systems_solved;
                    examined[i] = 1;
                    if (w) {
                        witnesses[i] = std::move(w);
                        std::size_t cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {
                        }
                    }
                }
                const std::size_t d = done.fetch_add(1) + 1;
                if (options.progress) {
                    std::lock_guard lock(progress_mutex);
                    options.progress(d, total);
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            best.store(0);
        }
    };

    const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    // Counters only cover topologies up to the winning index, so they do not
    // depend on how far other workers got.
    const std::size_t last = best.load() < total ? best.load() : total - 1;
    for (std::size_t i = 0; i <= last; ++i) {
        if (examined[i]) {
            ++result.topologies_examined;
            result.labelings_examined += solved[i];
        }
    }
    if (best.load() < total) {
        result.witness = std::move(witnesses[best.load()]);
        result.witness_topology = best.load();
    }
    return result;
}

}  // namespace pcg
