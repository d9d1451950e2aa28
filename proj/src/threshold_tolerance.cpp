#include "pcg/threshold_tolerance.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace pcg {

TTInstance::TTInstance(std::vector<TTNode> nodes) : nodes_(std::move(nodes)) {
    std::unordered_set<NodeName> seen;
    for (const auto& v : nodes_) {
        if (!seen.insert(v.name).second) {
            throw std::invalid_argument("duplicate node name '" + v.name + "'");
        }
        if (sgn(v.g) <= 0 || sgn(v.t) <= 0) {
            throw std::invalid_argument("node '" + v.name + "' needs positive g and t");
        }
    }
}

std::vector<NodeName> TTInstance::names() const {
    std::vector<NodeName> out;
    out.reserve(nodes_.size());
    for (const auto& v : nodes_) {
        out.push_back(v.name);
    }
    return out;
}

Graph tt_realize(const TTInstance& inst) {
    const auto& v = inst.nodes();
    const std::size_t n = v.size();
    std::vector<std::uint8_t> adj(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (v[i].g + v[j].g >= std::min(v[i].t, v[j].t)) {
                adj[i * n + j] = adj[j * n + i] = 1;
            }
        }
    }
    return Graph(inst.names(), std::move(adj));
}

IntegerizedTT integerize(const TTInstance& inst) {
    mpz_class m = 1;
    for (const auto& v : inst.nodes()) {
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), v.g.get_den_mpz_t());
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), v.t.get_den_mpz_t());
    }
    std::vector<TTNode> scaled;
    scaled.reserve(inst.size());
    const Rational factor(m);
    for (const auto& v : inst.nodes()) {
        scaled.push_back({v.name, Rational(v.g * factor), Rational(v.t * factor)});
    }
    return {TTInstance(std::move(scaled)), m};
}

std::string spine_node_name(const mpz_class& i) { return "x" + i.get_str(); }

std::string leaf_node_name(const NodeName& v) { return "l_" + v; }

PCGWitness tt_witness(const TTInstance& input) {
    const TTInstance inst = integerize(input).instance;
    if (inst.size() == 0) {
        throw std::invalid_argument("tt_witness needs at least one node");
    }
    mpz_class k = 0;
    Rational max_g = 0;
    for (const auto& v : inst.nodes()) {
        k = std::max(k, v.t.get_num());
        max_g = std::max(max_g, v.g);
    }
    if (!k.fits_ulong_p()) {
        throw std::invalid_argument("largest tolerance is too large for an explicit spine");
    }
    const unsigned long spine = k.get_ui();

    // Spine x_i is node i-1; leaves follow the spine.
    std::vector<std::string> nodes;
    nodes.reserve(spine + inst.size());
    std::vector<TreeEdge> edges;
    edges.reserve(spine - 1 + inst.size());
    const Rational half(1, 2);
    for (unsigned long i = 1; i <= spine; ++i) {
        nodes.push_back("x" + std::to_string(i));
        if (i > 1) {
            edges.push_back({i - 2, i - 1, half});
        }
    }
    std::vector<std::pair<std::size_t, NodeName>> leaves;
    leaves.reserve(inst.size());
    const Rational kq(k);
    for (const auto& v : inst.nodes()) {
        nodes.push_back(leaf_node_name(v.name));
        Rational w = v.g + (kq - v.t) / 2;
        edges.push_back({v.t.get_num().get_ui() - 1, nodes.size() - 1, std::move(w)});
        leaves.emplace_back(nodes.size() - 1, v.name);
    }
    PCGWitness witness{WeightedTree::build(std::move(nodes), std::move(edges), leaves), kq, Rational(2 * max_g + kq)};
    return witness;
}

Graph threshold_realize(const std::vector<ThresholdNode>& nodes, const Rational& threshold) {
    const std::size_t n = nodes.size();
    std::vector<NodeName> names;
    names.reserve(n);
    for (const auto& v : nodes) {
        names.push_back(v.name);
    }
    std::vector<std::uint8_t> adj(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (nodes[i].a + nodes[j].a >= threshold) {
                adj[i * n + j] = adj[j * n + i] = 1;
            }
        }
    }
    return Graph(std::move(names), std::move(adj));
}

TTInstance threshold_to_tt(const std::vector<ThresholdNode>& nodes, const Rational& threshold) {
    // a_v + a_w >= t  <=>  (a_v + c) + (a_w + c) >= t + 2c for any c.
    Rational shift = 0;
    for (const auto& v : nodes) {
        shift = std::max(shift, Rational(-v.a));
    }
    shift = std::max(shift, Rational(-threshold / 2));
    shift += 1;
    std::vector<TTNode> out;
    out.reserve(nodes.size());
    const Rational t = threshold + 2 * shift;
    for (const auto& v : nodes) {
        out.push_back({v.name, Rational(v.a + shift), t});
    }
    return TTInstance(std::move(out));
}

}  // namespace pcg
