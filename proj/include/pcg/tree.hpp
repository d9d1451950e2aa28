#pragma once

#include "pcg/graph.hpp"
#include "pcg/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pcg {

struct TreeEdge {
    std::size_t u;
    std::size_t v;
    Rational weight;
};

/// Tree with nonnegative exact edge weights. Some degree-1 nodes are flagged
/// as leaves carrying a graph node name; other nodes are plain tree nodes.
class WeightedTree {
public:
    struct EdgeSpec {
        std::string u;
        std::string v;
        Rational weight;
    };
    struct LeafSpec {
        std::string tree_node;
        NodeName graph_node;
    };

    WeightedTree() = default;

    /// Validates and builds. Throws std::invalid_argument when the edges do
    /// not form a tree on `nodes`, a weight is negative, a flagged leaf does
    /// not have degree 1, or leaf graph names repeat.
    static WeightedTree build(std::vector<std::string> nodes, const std::vector<EdgeSpec>& edges,
                              const std::vector<LeafSpec>& leaves);
    /// Same checks, with edges and leaves given by node index.
    static WeightedTree build(std::vector<std::string> nodes, std::vector<TreeEdge> edges,
                              const std::vector<std::pair<std::size_t, NodeName>>& leaves);

    std::size_t node_count() const { return names_.size(); }
    const std::string& node_name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& node_names() const { return names_; }
    const std::vector<TreeEdge>& edges() const { return edges_; }

    /// (neighbour, edge index) pairs.
    const std::vector<std::pair<std::size_t, std::size_t>>& neighbours(std::size_t i) const { return adj_[i]; }
    std::size_t degree(std::size_t i) const { return adj_[i].size(); }

    /// Tree node indices of the flagged leaves, in declaration order.
    const std::vector<std::size_t>& leaves() const { return leaf_nodes_; }
    /// Graph node names of the flagged leaves, parallel to leaves().
    const std::vector<NodeName>& leaf_names() const { return leaf_names_; }
    std::optional<NodeName> leaf_label(std::size_t tree_node) const;

    /// Same shape with every weight multiplied by `factor` (> 0).
    WeightedTree scaled(const Rational& factor) const;

private:
    std::vector<std::string> names_;
    std::vector<TreeEdge> edges_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
    std::vector<std::size_t> leaf_nodes_;
    std::vector<NodeName> leaf_names_;
    std::unordered_map<std::size_t, std::size_t> leaf_slot_;
};

/// Tree plus closed distance bounds [dmin, dmax].
struct PCGWitness {
    WeightedTree tree;
    Rational dmin;
    Rational dmax;
};

/// Throws std::invalid_argument if either bound is negative.
void validate_witness(const PCGWitness& w);

/// Symmetric leaf-to-leaf path lengths, indexed in WeightedTree::leaves() order.
class DistanceMatrix {
public:
    DistanceMatrix(std::vector<NodeName> names, std::vector<Rational> entries)
        : names_(std::move(names)), entries_(std::move(entries)) {}

    std::size_t size() const { return names_.size(); }
    const std::vector<NodeName>& names() const { return names_; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * names_.size() + j]; }
    /// Throws std::out_of_range for unknown names.
    const Rational& at(const NodeName& u, const NodeName& v) const;
    Rational max_entry() const;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::vector<NodeName> names_;
    std::vector<Rational> entries_;
};

DistanceMatrix leaf_distance_matrix(const WeightedTree& tree);

/// Graph on the leaf names; {u,v} is an edge iff dmin <= d(u,v) <= dmax.
Graph pcg_eval(const PCGWitness& witness);
Graph pcg_eval(const WeightedTree& tree, const Rational& dmin, const Rational& dmax);

/// Graph on the leaf names; {u,v} is an edge iff d(u,v) >= dmin.
Graph mlpg_eval(const WeightedTree& tree, const Rational& dmin);

/// True iff removing every degree-1 node leaves a path (or nothing).
bool is_caterpillar(const WeightedTree& tree);

/// Equivalent tree with the same leaves and distances in which every internal
/// node has degree 3 (two leaves give a single degree-2 middle node). Unlabeled
/// leaves are pruned, degree-2 nodes contracted, and high-degree nodes split by
/// zero-weight edges. Throws std::invalid_argument with fewer than two leaves.
WeightedTree normalize_tree(const WeightedTree& tree);

}  // namespace pcg
