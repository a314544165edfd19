#pragma once

#include <cstddef>
#include <vector>

#include "burn/partition.hpp"

namespace burn::detail {

/// One path of the forest left after the forced clusters are removed:
/// a Q_i (length B') or a Q'_j (length an element of Y), with the sizes of
/// the clusters tiling it from left to right.
struct TiledSegment {
  bool is_q = false;
  std::size_t length = 0;
  std::vector<std::size_t> cluster_sizes;
};

/// Exchange normalization followed by triple extraction: every Q'_j made up
/// of several clusters trades them for the single cluster of size |Q'_j|
/// found elsewhere; then the three odd cluster sizes on each Q_i are
/// unshifted, a = (size + 1) / 2. Throws ExtractionError when the tiling is
/// not of that shape.
Partition3 partition_from_tiling(const ThreePartitionInstance& inst,
                                 std::vector<TiledSegment> segments);

}  // namespace burn::detail
