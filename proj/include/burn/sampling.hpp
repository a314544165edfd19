#pragma once

#include <cstddef>
#include <random>

#include "burn/burning.hpp"
#include "burn/graph.hpp"

namespace burn {

/// G(n, p) random graph.
Graph random_graph(std::size_t n, double edge_probability, std::mt19937_64& rng);

/// Distinct uniformly random vertices, `length` of them.
BurningSchedule random_schedule(const Graph& g, std::size_t length, std::mt19937_64& rng);

}  // namespace burn
