#include "burn/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "burn/errors.hpp"

namespace burn {

Graph random_graph(std::size_t n, double edge_probability, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

BurningSchedule random_schedule(const Graph& g, std::size_t length, std::mt19937_64& rng) {
  if (length > g.order()) throw InvalidInput("schedule longer than the vertex count");
  std::vector<Vertex> pool(g.order());
  std::iota(pool.begin(), pool.end(), Vertex{0});
  BurningSchedule s;
  for (std::size_t i = 0; i < length; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
    s.sources.push_back(pool[i]);
  }
  return s;
}

}  // namespace burn
