#include "burn/detail/tiling.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace burn::detail {

namespace {

[[noreturn]] void misshapen(const std::string& what) {
  throw ExtractionError(ExtractionError::Kind::not_optimal_shaped, what);
}

}  // namespace

Partition3 partition_from_tiling(const ThreePartitionInstance& inst,
                                 std::vector<TiledSegment> segments) {
  for (const auto& seg : segments) {
    auto total = std::accumulate(seg.cluster_sizes.begin(), seg.cluster_sizes.end(), std::size_t{0});
    if (total != seg.length) misshapen("clusters do not tile a segment exactly");
  }

  for (std::size_t j = 0; j < segments.size(); ++j) {
    auto& seg = segments[j];
    if (seg.is_q) continue;
    if (seg.cluster_sizes.size() == 1) continue;  // sums match, so it is |Q'_j|
    bool swapped = false;
    for (std::size_t z = 0; z < segments.size() && !swapped; ++z) {
      if (z == j) continue;
      auto& sizes = segments[z].cluster_sizes;
      auto hit = std::find(sizes.begin(), sizes.end(), seg.length);
      if (hit == sizes.end()) continue;
      auto at = sizes.erase(hit);
      sizes.insert(at, seg.cluster_sizes.begin(), seg.cluster_sizes.end());
      seg.cluster_sizes.assign(1, seg.length);
      swapped = true;
    }
    if (!swapped) {
      misshapen("no cluster of size " + std::to_string(seg.length) + " to exchange");
    }
  }

  Partition3 out;
  for (const auto& seg : segments) {
    if (!seg.is_q) continue;
    if (seg.cluster_sizes.size() != 3) {
      misshapen("a Q segment is covered by " + std::to_string(seg.cluster_sizes.size()) +
                " clusters instead of 3");
    }
    Triple t{};
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t size = seg.cluster_sizes[i];
      if (size % 2 == 0) misshapen("even cluster size");
      t[i] = static_cast<std::int64_t>((size + 1) / 2);
    }
    out.triples.push_back(t);
  }
  if (!verify_partition(inst, out)) misshapen("recovered triples do not form a 3-partition");
  return out;
}

}  // namespace burn::detail
