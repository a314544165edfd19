#include "burn/reduction_interval.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "burn/detail/tiling.hpp"
#include "burn/errors.hpp"

namespace burn {

namespace {

struct Run {
  std::size_t begin = 0;
  std::size_t length = 0;
};

// Subpaths sorted by decreasing order, leftmost first on ties.
void sort_runs(std::vector<Run>& runs) {
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.begin < b.begin;
  });
}

[[noreturn]] void misshapen(const std::string& what) {
  throw ExtractionError(ExtractionError::Kind::not_optimal_shaped, what);
}

}  // namespace

DerivedSets derive_sets(const ThreePartitionInstance& inst) {
  DerivedSets out;
  const std::int64_t m = inst.max_element();
  for (auto a : inst.elements()) out.shifted.push_back(2 * a - 1);
  out.shifted_target = 2 * inst.target() - 3;
  for (std::int64_t v = 1; v <= 2 * m - 1; v += 2) out.odd_universe.push_back(v);

  std::vector<std::int64_t> sorted = out.shifted;
  std::sort(sorted.begin(), sorted.end());
  std::set_difference(out.odd_universe.begin(), out.odd_universe.end(), sorted.begin(), sorted.end(),
                      std::back_inserter(out.leftover));

  const auto sum = [](const std::vector<std::int64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
  };
  if (sum(out.shifted) != inst.n() * out.shifted_target ||
      static_cast<std::int64_t>(out.leftover.size()) != inst.slack() ||
      sum(out.shifted) + sum(out.leftover) != m * m) {
    throw Error("internal: odd-shifted sets are inconsistent");
  }
  return out;
}

const SpineSegment& IGArtifact::t_segment(std::size_t j) const {
  for (const auto& seg : segments) {
    if (seg.kind == SegmentKind::t && seg.index == j) return seg;
  }
  throw InvalidInput("no segment T_" + std::to_string(j));
}

VertexPath IGArtifact::spine() const {
  VertexPath out(spine_length);
  std::iota(out.begin(), out.end(), Vertex{0});
  return out;
}

IGArtifact construct_ig(const ThreePartitionInstance& inst) {
  IGArtifact art{.instance = inst, .sets = derive_sets(inst)};
  const auto m = static_cast<std::size_t>(inst.max_element());
  const auto n = static_cast<std::size_t>(inst.n());
  const auto k = static_cast<std::size_t>(inst.slack());
  const auto q_len = static_cast<std::size_t>(art.sets.shifted_target);
  auto t_len = [m](std::size_t j) { return 2 * (2 * m + 1 - j) + 1; };

  std::size_t pos = 0;
  auto append = [&](SegmentKind kind, std::size_t index, std::size_t length) {
    art.segments.push_back({kind, index, pos, length});
    pos += length;
  };
  for (std::size_t i = 1; i <= n; ++i) {
    append(SegmentKind::q, i, q_len);
    append(SegmentKind::t, i, t_len(i));
  }
  // Q'_j has the order of the j-th largest leftover value.
  for (std::size_t j = 1; j <= k; ++j) {
    append(SegmentKind::q_prime, j, static_cast<std::size_t>(art.sets.leftover[k - j]));
    append(SegmentKind::t, n + j, t_len(n + j));
  }
  for (std::size_t j = n + k + 1; j <= m + 1; ++j) append(SegmentKind::t, j, t_len(j));
  art.spine_length = pos;

  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < pos; ++v) edges.emplace_back(v, v + 1);
  auto next_leaf = static_cast<Vertex>(pos);
  art.combs.resize(m + 1);
  for (const auto& seg : art.segments) {
    if (seg.kind != SegmentKind::t) continue;
    auto& comb = art.combs[seg.index - 1];
    for (std::size_t off = 1; off + 1 < seg.length; ++off) {
      auto host = static_cast<Vertex>(seg.begin + off);
      comb.push_back({next_leaf, host});
      edges.emplace_back(host, next_leaf);
      ++next_leaf;
    }
  }
  art.graph = Graph::from_edges(next_leaf, edges);

  const std::size_t side = 2 * m + 1;
  if (art.spine_length != side * side || art.graph.order() != 7 * m * m + 6 * m ||
      art.graph.size() + 1 != art.graph.order() || !is_connected(art.graph)) {
    throw Error("internal: IG(X) construction violates its size or caterpillar invariants");
  }
  for (std::size_t j = 1; j <= m + 1; ++j) {
    if (art.combs[j - 1].size() + 2 != t_len(j)) throw Error("internal: comb size mismatch");
  }
  return art;
}

IntervalRepresentation emit_interval_representation(const IGArtifact& art) {
  IntervalRepresentation rep(art.graph.order());
  for (std::size_t p = 0; p < art.spine_length; ++p) {
    const auto base = static_cast<std::int64_t>(20 * p);
    rep[p] = {base, base + 30};
  }
  for (const auto& comb : art.combs) {
    for (const auto& [leaf, host] : comb) {
      const auto base = static_cast<std::int64_t>(20 * host);
      rep[leaf] = {base + 12, base + 18};
    }
  }
  return rep;
}

Graph comb_graph(const IGArtifact& art, std::size_t j) {
  if (j < 1 || j > art.combs.size()) throw InvalidInput("no comb T_" + std::to_string(j));
  const auto& seg = art.t_segment(j);
  std::vector<Vertex> keep;
  for (std::size_t off = 0; off < seg.length; ++off) keep.push_back(static_cast<Vertex>(seg.begin + off));
  for (const auto& leaf : art.combs[j - 1]) keep.push_back(leaf.leaf);
  return induced_subgraph(art.graph, keep);
}

BurningSchedule partition_to_schedule(const IGArtifact& art, const Partition3& p) {
  if (!verify_partition(art.instance, p)) {
    throw InvalidInput("partition does not solve the instance behind this artifact");
  }
  const auto m = static_cast<std::size_t>(art.m());
  std::vector<Run> runs;
  for (const auto& seg : art.segments) {
    if (seg.kind != SegmentKind::q) {
      runs.push_back({seg.begin, seg.length});
      continue;
    }
    // Q_i splits left to right in the order the triple lists its elements.
    std::size_t at = seg.begin;
    for (auto a : p.triples[seg.index - 1]) {
      const auto len = static_cast<std::size_t>(2 * a - 1);
      runs.push_back({at, len});
      at += len;
    }
  }
  sort_runs(runs);

  BurningSchedule s;
  for (std::size_t i = 1; i <= 2 * m + 1; ++i) {
    const Run& run = runs[i - 1];
    if (run.length != 2 * (2 * m + 1 - i) + 1) throw Error("internal: subpath orders are not 1, 3, ..., 4m+1");
    s.sources.push_back(static_cast<Vertex>(run.begin + (2 * m - i + 1)));
  }
  return s;
}

Partition3 schedule_to_partition(const IGArtifact& art, const BurningSchedule& s) {
  const auto m = static_cast<std::size_t>(art.m());
  const std::size_t k = 2 * m + 1;
  if (s.length() != k) {
    throw ExtractionError(ExtractionError::Kind::precondition,
                          "schedule length " + std::to_string(s.length()) + " is not 2m+1 = " +
                              std::to_string(k));
  }
  bool complete = false;
  try {
    complete = verify_schedule(art.graph, s);
  } catch (const InvalidInput& e) {
    throw ExtractionError(ExtractionError::Kind::precondition, e.what());
  }
  if (!complete) {
    throw ExtractionError(ExtractionError::Kind::precondition, "schedule does not burn IG(X)");
  }

  // Clusters restricted to the spine are intervals of positions; an optimal
  // schedule tiles P_I with them exactly.
  std::vector<Run> tiles;
  for (std::size_t i = 1; i <= k; ++i) {
    const Vertex x = s.sources[i - 1];
    if (x >= art.spine_length) misshapen("fire source " + std::to_string(x) + " is off P_I");
    const std::size_t r = k - i;
    if (x < r || x + r >= art.spine_length) misshapen("a cluster is clipped by the end of P_I");
    tiles.push_back({x - r, 2 * r + 1});
  }
  std::sort(tiles.begin(), tiles.end(), [](const Run& a, const Run& b) { return a.begin < b.begin; });
  std::size_t expect = 0;
  for (const auto& tile : tiles) {
    if (tile.begin != expect) misshapen("clusters overlap on P_I");
    expect += tile.length;
  }

  std::vector<detail::TiledSegment> forest;
  auto tile_it = tiles.begin();
  for (const auto& seg : art.segments) {
    const std::size_t end = seg.begin + seg.length;
    std::vector<std::size_t> sizes;
    while (tile_it != tiles.end() && tile_it->begin < end) {
      if (tile_it->begin + tile_it->length > end) misshapen("a cluster crosses a segment boundary");
      sizes.push_back(tile_it->length);
      ++tile_it;
    }
    if (seg.kind == SegmentKind::t) {
      if (sizes.size() != 1) misshapen("T_" + std::to_string(seg.index) + " is not burnt by one source");
      continue;
    }
    forest.push_back({seg.kind == SegmentKind::q, seg.length, std::move(sizes)});
  }
  return detail::partition_from_tiling(art.instance, std::move(forest));
}

}  // namespace burn
