#pragma once

#include "pcg/threshold_tolerance.hpp"

#include <random>

namespace pcg {

/// Nodes "v1".."vn" with n uniform in [min_nodes, max_nodes] and integer g, t
/// uniform in [1, max_value].
TTInstance random_integer_tt(std::mt19937_64& rng, std::size_t min_nodes, std::size_t max_nodes, long max_value);

/// As above but each g and t is p/q with q uniform in [1, max_den] and p
/// uniform in [1, max_value * q].
TTInstance random_rational_tt(std::mt19937_64& rng, std::size_t min_nodes, std::size_t max_nodes, long max_value,
                              long max_den);

}  // namespace pcg
