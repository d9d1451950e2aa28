#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pcg {

using NodeName = std::string;
using NamePair = std::pair<NodeName, NodeName>;

/// Finite simple undirected graph over opaque, whitespace-free node names.
///
/// Nodes keep their insertion order; edges are unordered pairs. Values are
/// immutable after construction. Equality compares node sets and edge sets
/// by name, so two graphs built in different node orders can still be equal.
class Graph {
public:
    Graph() = default;

    /// Graph on `names` with the adjacency given by a row-major n*n matrix.
    /// The matrix must be symmetric with a zero diagonal.
    Graph(std::vector<NodeName> names, std::vector<std::uint8_t> adjacency);

    std::size_t size() const { return names_.size(); }
    const std::vector<NodeName>& nodes() const { return names_; }
    const NodeName& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> index_of(const NodeName& name) const;

    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * names_.size() + j] != 0; }
    bool adjacent(const NodeName& u, const NodeName& v) const;
    std::size_t degree(std::size_t i) const;
    std::size_t edge_count() const { return edge_count_; }

    /// Edges as (smaller, larger) name pairs, sorted lexicographically.
    std::vector<NamePair> edges() const;

    const std::vector<std::uint8_t>& adjacency() const { return adj_; }

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<NodeName> names_;
    std::unordered_map<NodeName, std::size_t> index_;
    std::vector<std::uint8_t> adj_;
    std::size_t edge_count_ = 0;
};

/// Builds a graph, deduplicating edges. Throws std::invalid_argument on a
/// duplicate node name, an unknown endpoint, or a self-loop.
Graph graph_from_edges(std::vector<NodeName> names, const std::vector<NamePair>& edges);

/// The 8-node, 20-edge graph H on nodes "1".."8" that is not a PCG.
Graph graph_h();

Graph complete_graph(std::vector<NodeName> names);
Graph empty_graph(std::vector<NodeName> names);

/// Same nodes; each pair is an edge iff it is not one in `g`.
Graph complement(const Graph& g);

/// Node bijection as a map from names of the first graph to names of the second.
using NodeMapping = std::unordered_map<NodeName, NodeName>;

/// Backtracking isomorphism search with degree pruning; fine for n <= 16.
std::optional<NodeMapping> are_isomorphic(const Graph& a, const Graph& b);

/// True iff `mapping` is a bijection carrying the edges of `a` exactly onto those of `b`.
bool is_isomorphism(const Graph& a, const Graph& b, const NodeMapping& mapping);

/// All automorphisms of `g` as permutations of node indices (perm[i] = image of i).
std::vector<std::vector<std::size_t>> automorphisms(const Graph& g);

inline constexpr std::size_t kDefaultEnumerationLimit = 7;

/// Visits one representative per isomorphism class of graphs on `n` nodes
/// named "1".."n". The visitor returns false to stop early. Throws
/// std::invalid_argument when n exceeds `limit`.
void enumerate_graphs(std::size_t n, const std::function<bool(const Graph&)>& visit,
                      std::size_t limit = kDefaultEnumerationLimit);

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t limit = kDefaultEnumerationLimit);

/// "1", "2", ..., "n".
std::vector<NodeName> numbered_names(std::size_t n);

}  // namespace pcg
