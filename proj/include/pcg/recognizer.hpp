#pragma once

#include "pcg/graph.hpp"
#include "pcg/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcg {

/// Unrooted tree whose leaves are 0..n-1 and whose internal nodes
/// n..2n-3 all have degree 3. Leaf i stands for node i of the graph being
/// recognized.
struct Topology {
    std::size_t leaf_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t node_count() const { return 2 * leaf_count - 2; }
};

inline constexpr std::size_t kDefaultRecognitionLimit = 9;

/// (2n-5)!!, the number of unrooted binary topologies on n labeled leaves.
std::uint64_t topology_count(std::size_t n);

/// Visits every topology on n leaves once, built by inserting leaf k into
/// each edge of every topology on the first k leaves. The visitor returns
/// false to stop. Throws std::invalid_argument unless 3 <= n <= limit.
void enumerate_topologies(std::size_t n, const std::function<bool(const Topology&)>& visit,
                          std::size_t limit = kDefaultRecognitionLimit);
std::vector<Topology> enumerate_topologies(std::size_t n, std::size_t limit = kDefaultRecognitionLimit);

/// Nontrivial splits as sorted bitmasks normalised to exclude leaf 0; equal
/// keys mean equal topologies.
std::vector<std::uint32_t> split_key(const Topology& t);

struct LabelingStats {
    /// Linear programs solved (one per complete labeling without pruning).
    std::uint64_t systems_solved = 0;
};

/// Searches the LOW/HIGH labelings of the non-edges of `g` on topology `t`
/// for a strictly feasible weighting with dmax normalised to 1. Labelings are
/// tried in lexicographic order with LOW before HIGH, so the first feasible
/// one is the same whether or not `prune` cuts infeasible prefixes.
/// Throws std::invalid_argument when leaf and node counts differ.
std::optional<PCGWitness> topology_feasible(const Graph& g, const Topology& t, bool prune = false,
                                            LabelingStats* stats = nullptr);

struct RecognitionOptions {
    std::size_t jobs = 1;
    /// Examine one topology per orbit of the automorphism group of the graph.
    bool symmetry = false;
    /// Refute labelings by infeasible prefixes instead of one by one.
    bool prune = false;
    std::size_t limit = kDefaultRecognitionLimit;
    /// Called with (topologies done, total) from worker threads, serialized.
    std::function<void(std::size_t, std::size_t)> progress;
};

struct RecognitionResult {
    std::optional<PCGWitness> witness;
    std::size_t nodes = 0;
    std::size_t topologies_total = 0;
    std::size_t topologies_examined = 0;
    std::uint64_t labelings_examined = 0;
    /// Index of the topology that produced the witness, if any.
    std::optional<std::size_t> witness_topology;

    bool is_pcg() const { return witness.has_value(); }
    /// `not-pcg nodes=<n> topologies=<k> labelings=<m>`.
    std::string certificate() const;
};

/// Exhaustive PCG membership test for 3 <= n <= options.limit. Complete and
/// edgeless graphs are answered directly with a star. Any witness is
/// re-verified with pcg_eval before it is returned.
RecognitionResult recognize_pcg(const Graph& g, const RecognitionOptions& options = {});

}  // namespace pcg
