#include "burn/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "burn/errors.hpp"

namespace burn {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n >= kUnreachable) throw InvalidInput("graph too large");
  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidInput("edge " + std::to_string(u) + "-" + std::to_string(v) +
                         " out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw InvalidInput("parallel edge at vertex " + std::to_string(v));
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : bits_(universe, 0) {
  for (Vertex v : members) insert(v);
}

bool VertexSet::insert(Vertex v) {
  if (bits_[v]) return false;
  bits_[v] = 1;
  ++count_;
  return true;
}

bool VertexSet::erase(Vertex v) {
  if (!bits_[v]) return false;
  bits_[v] = 0;
  --count_;
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v] && !other.bits_[v]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v] && other.bits_[v]) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (other.bits_[v]) insert(static_cast<Vertex>(v));
  }
  return *this;
}

bool is_path_in(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.order() || !seen.insert(path[i]).second) return false;
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

Graph build_path(std::size_t n) {
  if (n == 0) throw InvalidInput("path needs at least one vertex");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph build_grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InvalidInput("grid dimensions must be positive");
  std::vector<Edge> edges;
  edges.reserve(2 * rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto id = static_cast<Vertex>(r * cols + c);
      if (c + 1 < cols) edges.emplace_back(id, id + 1);
      if (r + 1 < rows) edges.emplace_back(id, static_cast<Vertex>(id + cols));
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph build_path_forest(std::span<const std::size_t> lengths) {
  if (lengths.empty()) throw InvalidInput("path forest needs at least one component");
  std::vector<Edge> edges;
  Vertex next = 0;
  for (std::size_t len : lengths) {
    if (len == 0) throw InvalidInput("path forest component of length 0");
    for (std::size_t i = 0; i + 1 < len; ++i) edges.emplace_back(next + i, next + i + 1);
    next += static_cast<Vertex>(len);
  }
  return Graph::from_edges(next, edges);
}

Graph build_interval_graph(const IntervalRepresentation& rep) {
  const std::size_t n = rep.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (rep[v].left > rep[v].right) {
      throw InvalidInput("interval of vertex " + std::to_string(v) + " has left > right");
    }
  }
  std::vector<Vertex> by_left(n);
  for (std::size_t v = 0; v < n; ++v) by_left[v] = static_cast<Vertex>(v);
  std::stable_sort(by_left.begin(), by_left.end(),
                   [&](Vertex a, Vertex b) { return rep[a].left < rep[b].left; });

  // Sweep by left endpoint; an active interval whose right end reaches the
  // current left end overlaps the current one (closed intervals).
  std::vector<Edge> edges;
  std::multimap<std::int64_t, Vertex> active;
  for (Vertex v : by_left) {
    while (!active.empty() && active.begin()->first < rep[v].left) active.erase(active.begin());
    for (const auto& [right, u] : active) edges.emplace_back(std::min(u, v), std::max(u, v));
    active.emplace(rep[v].right, v);
  }
  return Graph::from_edges(n, edges);
}

Graph build_permutation_graph(std::size_t size, std::span<const std::uint32_t> perm) {
  if (perm.size() != size) throw InvalidInput("permutation length does not match size");
  std::vector<bool> seen(size + 1, false);
  for (auto value : perm) {
    if (value < 1 || value > size || seen[value]) {
      throw InvalidInput("not a permutation of 1.." + std::to_string(size));
    }
    seen[value] = true;
  }
  // Scanning left to right, every earlier larger value forms an inversion
  // with the current one.
  std::vector<Edge> edges;
  std::set<std::uint32_t> earlier;
  for (auto value : perm) {
    for (auto it = earlier.upper_bound(value); it != earlier.end(); ++it) {
      edges.emplace_back(value - 1, *it - 1);
    }
    earlier.insert(value);
  }
  return Graph::from_edges(size, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(g.order(), kUnreachable);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.order()) throw InvalidInput("induced_subgraph: vertex out of range");
    if (index[keep[i]] != kUnreachable) throw InvalidInput("induced_subgraph: repeated vertex");
    index[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      if (index[w] != kUnreachable && i < index[w]) edges.emplace_back(static_cast<Vertex>(i), index[w]);
    }
  }
  return Graph::from_edges(keep.size(), edges);
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<std::uint32_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  for (Vertex s : sources) {
    if (s >= g.order()) throw InvalidInput("source vertex out of range");
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

VertexSet ball(const Graph& g, std::span<const Vertex> sources, std::size_t radius) {
  if (sources.empty()) throw InvalidInput("ball needs a nonempty source set");
  VertexSet out(g.order());
  std::vector<Vertex> frontier;
  for (Vertex s : sources) {
    if (s >= g.order()) throw InvalidInput("source vertex out of range");
    if (out.insert(s)) frontier.push_back(s);
  }
  std::vector<Vertex> next;
  for (std::size_t step = 0; step < radius && !frontier.empty(); ++step) {
    next.clear();
    for (Vertex v : frontier) {
      for (Vertex w : g.neighbors(v)) {
        if (out.insert(w)) next.push_back(w);
      }
    }
    frontier.swap(next);
  }
  return out;
}

VertexSet ball(const Graph& g, const VertexSet& sources, std::size_t radius) {
  auto members = sources.members();
  return ball(g, members, radius);
}

std::vector<std::uint32_t> component_labels(const Graph& g) {
  std::vector<std::uint32_t> label(g.order(), kUnreachable);
  std::uint32_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != kUnreachable) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == kUnreachable) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t component_count(const Graph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

std::uint32_t eccentricity(const Graph& g, Vertex v) {
  const Vertex source[] = {v};
  auto dist = bfs_distances(g, source);
  return *std::max_element(dist.begin(), dist.end());
}

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw InvalidInput(std::string(what) + " requires a connected graph");
}

// Lexicographically smallest shortest path from `from` to `to`, walking
// greedily along decreasing distance to `to`.
VertexPath smallest_shortest_path(const Graph& g, Vertex from, Vertex to) {
  const Vertex target[] = {to};
  auto dist_to = bfs_distances(g, target);
  VertexPath path{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex w : g.neighbors(cur)) {
      if (dist_to[w] + 1 == dist_to[cur]) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

}  // namespace

Vertex radical_center(const Graph& g) {
  require_connected(g, "radical_center");
  Vertex best = 0;
  std::uint32_t best_ecc = kUnreachable;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto ecc = eccentricity(g, v);
    if (ecc < best_ecc) {
      best_ecc = ecc;
      best = v;
    }
  }
  return best;
}

VertexPath longest_shortest_path(const Graph& g) {
  require_connected(g, "longest_shortest_path");
  Vertex best_from = 0;
  Vertex best_to = 0;
  std::uint32_t diameter = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const Vertex source[] = {u};
    auto dist = bfs_distances(g, source);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist[v] > diameter) {
        diameter = dist[v];
        best_from = u;
        best_to = v;
      }
    }
  }
  return smallest_shortest_path(g, best_from, best_to);
}

std::vector<VertexPath> diametral_paths_by_component(const Graph& g) {
  auto labels = component_labels(g);
  std::size_t count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<Vertex>> members(count);
  for (Vertex v = 0; v < g.order(); ++v) members[labels[v]].push_back(v);

  std::vector<VertexPath> out;
  out.reserve(count);
  for (const auto& comp : members) {
    auto sub = induced_subgraph(g, comp);
    auto local = longest_shortest_path(sub);
    VertexPath path;
    path.reserve(local.size());
    for (Vertex v : local) path.push_back(comp[v]);
    out.push_back(std::move(path));
  }
  return out;
}

}  // namespace burn
