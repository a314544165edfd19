#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace burn {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Distance value for vertices that a traversal never reached.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/**
 * Immutable undirected simple graph on vertices 0..n-1.
 *
 * Adjacency is stored in compressed rows with every neighbor list sorted
 * ascending. Construction rejects loops, parallel edges and out-of-range ids,
 * so a Graph value is always simple and symmetric.
 */
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list; each undirected edge must appear once.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Membership set over the vertex ids of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, 0) {}
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool full() const { return count_ == bits_.size(); }
  bool contains(Vertex v) const { return bits_[v] != 0; }

  /// Returns true when v was not already present.
  bool insert(Vertex v);
  bool erase(Vertex v);

  std::vector<Vertex> members() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  VertexSet& operator|=(const VertexSet& other);

  bool operator==(const VertexSet& other) const { return bits_ == other.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
};

/// Ordered vertex list realizing a simple path in some host graph.
using VertexPath = std::vector<Vertex>;

/// True when `path` is nonempty, has distinct entries and consecutive
/// entries are adjacent in `g`.
bool is_path_in(const Graph& g, std::span<const Vertex> path);

struct Interval {
  std::int64_t left = 0;
  std::int64_t right = 0;
  bool operator==(const Interval&) const = default;
};

/// Closed integer interval per vertex id.
using IntervalRepresentation = std::vector<Interval>;

// Generators. Ids are assigned deterministically: paths left to right, grids
// row-major (r, c) -> r * cols + c, forests component after component.
Graph build_path(std::size_t n);
Graph build_grid(std::size_t rows, std::size_t cols);
Graph build_path_forest(std::span<const std::size_t> lengths);
Graph build_interval_graph(const IntervalRepresentation& rep);

/// Permutation graph of `perm`, a permutation of 1..size. Vertex i-1 stands
/// for value i; values i < j are adjacent iff j precedes i in `perm`.
Graph build_permutation_graph(std::size_t size, std::span<const std::uint32_t> perm);

/// Induced subgraph on `keep`; vertex keep[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Multi-source BFS distances; kUnreachable where no source reaches.
std::vector<std::uint32_t> bfs_distances(const Graph& g, std::span<const Vertex> sources);

/// G.N_radius[sources]: every vertex within `radius` hops of the sources.
VertexSet ball(const Graph& g, std::span<const Vertex> sources, std::size_t radius);
VertexSet ball(const Graph& g, const VertexSet& sources, std::size_t radius);

/// Component label per vertex, labels numbered by smallest member.
std::vector<std::uint32_t> component_labels(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

std::uint32_t eccentricity(const Graph& g, Vertex v);

/// Vertex of minimum eccentricity, smallest id on ties. Requires connected g.
Vertex radical_center(const Graph& g);

/// A diametral shortest path. The start is the smallest id of maximum
/// eccentricity, the end the smallest id at that distance from it, and the
/// route is the lexicographically smallest shortest path between them.
/// Requires connected g.
VertexPath longest_shortest_path(const Graph& g);

/// longest_shortest_path of every component (components ordered by their
/// smallest vertex), expressed in ids of g. Works on disconnected graphs.
std::vector<VertexPath> diametral_paths_by_component(const Graph& g);

}  // namespace burn
