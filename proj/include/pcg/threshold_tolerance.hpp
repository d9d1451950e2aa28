#pragma once

#include "pcg/graph.hpp"
#include "pcg/rational.hpp"
#include "pcg/tree.hpp"

#include <vector>

namespace pcg {

/// Node set with a positive weight g and a positive tolerance t per node.
struct TTNode {
    NodeName name;
    Rational g;
    Rational t;
};

class TTInstance {
public:
    TTInstance() = default;
    /// Throws std::invalid_argument on duplicate names or a non-positive g or t.
    explicit TTInstance(std::vector<TTNode> nodes);

    const std::vector<TTNode>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    std::vector<NodeName> names() const;

private:
    std::vector<TTNode> nodes_;
};

/// {x,y} is an edge iff g(x) + g(y) >= min(t(x), t(y)).
Graph tt_realize(const TTInstance& inst);

struct IntegerizedTT {
    TTInstance instance;
    /// Least common multiple of every denominator of g and t.
    mpz_class multiplier;
};

/// Scales g and t by the lcm of their denominators so both become positive integers.
IntegerizedTT integerize(const TTInstance& inst);

/// Caterpillar witness: spine x1..xK (K = max t after integerizing) joined by
/// edges of weight 1/2, and leaf l_v hanging from x_{t(v)} with weight
/// g(v) + (K - t(v))/2. Bounds are dmin = K and dmax = 2 max g + K.
PCGWitness tt_witness(const TTInstance& inst);

/// Tree node names used by tt_witness.
std::string spine_node_name(const mpz_class& i);
std::string leaf_node_name(const NodeName& v);

/// Threshold graph: {v,w} is an edge iff a_v + a_w >= threshold.
struct ThresholdNode {
    NodeName name;
    Rational a;
};
Graph threshold_realize(const std::vector<ThresholdNode>& nodes, const Rational& threshold);

/// Equivalent threshold tolerance instance with constant tolerance. Weights
/// and threshold are shifted (a + c, t + 2c) into the positive range.
TTInstance threshold_to_tt(const std::vector<ThresholdNode>& nodes, const Rational& threshold);

}  // namespace pcg
