#include "burn/reduction_permutation.hpp"

#include <algorithm>
#include <string>

#include "burn/detail/tiling.hpp"
#include "burn/errors.hpp"

namespace burn {

namespace {

bool induces_single_path(const Permutation& block, std::uint32_t first) {
  Permutation relative;
  relative.reserve(block.size());
  for (auto v : block) relative.push_back(v - first + 1);
  Graph g = build_permutation_graph(block.size(), relative);
  if (g.size() + 1 != g.order() || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

// Walks the path component containing `start` (an endpoint).
VertexPath walk_path(const Graph& g, Vertex start) {
  VertexPath path{start};
  Vertex prev = kUnreachable;
  Vertex cur = start;
  for (;;) {
    Vertex next = kUnreachable;
    for (Vertex w : g.neighbors(cur)) {
      if (w != prev) next = w;
    }
    if (next == kUnreachable) break;
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  return path;
}

[[noreturn]] void misshapen(const std::string& what) {
  throw ExtractionError(ExtractionError::Kind::not_optimal_shaped, what);
}

}  // namespace

Permutation path_permutation(std::uint32_t first, std::size_t length) {
  if (length == 0) throw InvalidInput("path block needs positive length");
  if (first == 0) throw InvalidInput("permutation values start at 1");
  const std::uint32_t x = first;
  const auto t = static_cast<std::uint32_t>(length);
  const std::uint32_t y = x + t - 1;

  Permutation p;
  switch (t) {
    case 1: p = {x}; break;
    case 2: p = {y, x}; break;
    case 3: p = {y, x, x + 1}; break;
    case 4: p = {x + 1, y, x, x + 2}; break;
    default: {
      p.resize(t);
      // Slots are 1-based h. Odd slots climb two ahead, even slots trail
      // three behind; the tail slot closes the path at y (even t) or y-1 (odd t).
      for (std::uint32_t h = 1; h <= t; ++h) {
        std::uint32_t value;
        if (h % 2 == 1) {
          value = (t % 2 == 0 && h == t - 1) ? y : (t % 2 == 1 && h == t) ? y - 1 : x + h + 1;
        } else {
          value = (h == 2) ? x : x + h - 3;
        }
        p[h - 1] = value;
      }
    }
  }
  if (!induces_single_path(p, x)) {
    throw Error("internal: block of length " + std::to_string(t) + " does not induce a path");
  }
  return p;
}

ForestPermutation forest_permutation(std::span<const std::size_t> lengths) {
  if (lengths.empty()) throw InvalidInput("forest permutation needs at least one length");
  ForestPermutation out;
  std::uint32_t last = 0;
  for (std::size_t len : lengths) {
    if (len == 0) throw InvalidInput("forest permutation length must be positive");
    auto block = path_permutation(last + 1, len);
    out.plan.push_back({last + 1, static_cast<std::uint32_t>(last + len)});
    out.perm.insert(out.perm.end(), block.begin(), block.end());
    last += static_cast<std::uint32_t>(len);
  }
  return out;
}

PGArtifact construct_px(const ThreePartitionInstance& inst) {
  PGArtifact art{.instance = inst, .sets = derive_sets(inst)};
  const auto m = static_cast<std::size_t>(inst.max_element());
  std::vector<std::size_t> lengths(static_cast<std::size_t>(inst.n()),
                                   static_cast<std::size_t>(art.sets.shifted_target));
  for (auto it = art.sets.leftover.rbegin(); it != art.sets.leftover.rend(); ++it) {
    lengths.push_back(static_cast<std::size_t>(*it));
  }
  auto forest = forest_permutation(lengths);
  art.perm = std::move(forest.perm);
  art.plan = std::move(forest.plan);
  art.graph = build_permutation_graph(art.perm.size(), art.perm);

  for (const auto& seg : art.plan) {
    Vertex start = seg.first - 1;
    for (Vertex v = seg.first - 1; v < seg.last; ++v) {
      if (art.graph.degree(v) <= 1) {
        start = v;
        break;
      }
    }
    art.paths.push_back(walk_path(art.graph, start));
  }

  if (art.graph.order() != m * m || art.plan.back().last != m * m ||
      component_count(art.graph) != lengths.size()) {
    throw Error("internal: P(X) is not a path forest on m^2 vertices");
  }
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    if (art.paths[j].size() != lengths[j]) throw Error("internal: P(X) component order mismatch");
  }
  return art;
}

BurningSchedule partition_to_schedule_pg(const PGArtifact& art, const Partition3& p) {
  if (!verify_partition(art.instance, p)) {
    throw InvalidInput("partition does not solve the instance behind this artifact");
  }
  struct Run {
    std::size_t component;
    std::size_t begin;
    std::size_t length;
  };
  const auto n = static_cast<std::size_t>(art.instance.n());
  std::vector<Run> runs;
  for (std::size_t c = 0; c < art.paths.size(); ++c) {
    if (c >= n) {
      runs.push_back({c, 0, art.paths[c].size()});
      continue;
    }
    std::size_t at = 0;
    for (auto a : p.triples[c]) {
      const auto len = static_cast<std::size_t>(2 * a - 1);
      runs.push_back({c, at, len});
      at += len;
    }
  }
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
    if (a.length != b.length) return a.length > b.length;
    if (a.component != b.component) return a.component < b.component;
    return a.begin < b.begin;
  });

  const auto m = static_cast<std::size_t>(art.m());
  BurningSchedule s;
  for (std::size_t i = 1; i <= m; ++i) {
    const Run& run = runs[i - 1];
    if (run.length != 2 * (m - i) + 1) throw Error("internal: run orders are not 1, 3, ..., 2m-1");
    s.sources.push_back(art.paths[run.component][run.begin + (m - i)]);
  }
  return s;
}

Partition3 schedule_to_partition_pg(const PGArtifact& art, const BurningSchedule& s) {
  const auto m = static_cast<std::size_t>(art.m());
  if (s.length() != m) {
    throw ExtractionError(ExtractionError::Kind::precondition,
                          "schedule length " + std::to_string(s.length()) + " is not m = " +
                              std::to_string(m));
  }
  bool complete = false;
  try {
    complete = verify_schedule(art.graph, s);
  } catch (const InvalidInput& e) {
    throw ExtractionError(ExtractionError::Kind::precondition, e.what());
  }
  if (!complete) throw ExtractionError(ExtractionError::Kind::precondition, "schedule does not burn P(X)");

  std::vector<std::size_t> component(art.graph.order());
  std::vector<std::size_t> position(art.graph.order());
  for (std::size_t c = 0; c < art.paths.size(); ++c) {
    for (std::size_t i = 0; i < art.paths[c].size(); ++i) {
      component[art.paths[c][i]] = c;
      position[art.paths[c][i]] = i;
    }
  }

  // (begin, length) of every cluster, per component.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tiles(art.paths.size());
  for (std::size_t i = 1; i <= m; ++i) {
    const Vertex x = s.sources[i - 1];
    const std::size_t r = m - i;
    const std::size_t c = component[x];
    const std::size_t at = position[x];
    if (at < r || at + r >= art.paths[c].size()) misshapen("a cluster is clipped by a path end");
    tiles[c].emplace_back(at - r, 2 * r + 1);
  }

  const auto n = static_cast<std::size_t>(art.instance.n());
  std::vector<detail::TiledSegment> forest;
  for (std::size_t c = 0; c < art.paths.size(); ++c) {
    auto& list = tiles[c];
    std::sort(list.begin(), list.end());
    std::size_t expect = 0;
    std::vector<std::size_t> sizes;
    for (auto [begin, length] : list) {
      if (begin != expect) misshapen("clusters overlap on a component");
      expect += length;
      sizes.push_back(length);
    }
    forest.push_back({c < n, art.paths[c].size(), std::move(sizes)});
  }
  return detail::partition_from_tiling(art.instance, std::move(forest));
}

}  // namespace burn
