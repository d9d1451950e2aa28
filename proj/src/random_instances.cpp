#include "pcg/random_instances.hpp"

namespace pcg {

namespace {

std::size_t pick_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

long pick(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational pick_rational(std::mt19937_64& rng, long max_value, long max_den) {
    const long den = pick(rng, 1, max_den);
    return make_rational(pick(rng, 1, max_value * den), den);
}

}  // namespace

TTInstance random_integer_tt(std::mt19937_64& rng, std::size_t min_nodes, std::size_t max_nodes, long max_value) {
    const std::size_t n = pick_size(rng, min_nodes, max_nodes);
    std::vector<TTNode> nodes;
    for (std::size_t i = 1; i <= n; ++i) {
        Rational g(pick(rng, 1, max_value));
        Rational t(pick(rng, 1, max_value));
        nodes.push_back({"v" + std::to_string(i), std::move(g), std::move(t)});
    }
    return TTInstance(std::move(nodes));
}

TTInstance random_rational_tt(std::mt19937_64& rng, std::size_t min_nodes, std::size_t max_nodes, long max_value,
                              long max_den) {
    const std::size_t n = pick_size(rng, min_nodes, max_nodes);
    std::vector<TTNode> nodes;
    for (std::size_t i = 1; i <= n; ++i) {
        Rational g = pick_rational(rng, max_value, max_den);
        Rational t = pick_rational(rng, max_value, max_den);
        nodes.push_back({"v" + std::to_string(i), std::move(g), std::move(t)});
    }
    return TTInstance(std::move(nodes));
}

}  // namespace pcg
