#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "burn/burning.hpp"
#include "burn/graph.hpp"
#include "burn/partition.hpp"
#include "burn/reduction_interval.hpp"

namespace burn {

using Permutation = std::vector<std::uint32_t>;

/// Values first..last (inclusive) of one path-inducing block.
struct PermutationSegment {
  std::uint32_t first = 0;
  std::uint32_t last = 0;
  std::size_t length() const { return last - first + 1; }
  bool operator==(const PermutationSegment&) const = default;
};

using SegmentPlan = std::vector<PermutationSegment>;

/// Arrangement of the values first..first+length-1 whose inversion graph is a
/// single path. Throws Error if the result is not a path.
Permutation path_permutation(std::uint32_t first, std::size_t length);

struct ForestPermutation {
  Permutation perm;
  SegmentPlan plan;
};

/// Concatenated path blocks over consecutive value ranges, one per length.
ForestPermutation forest_permutation(std::span<const std::size_t> lengths);

/// The permutation graph P(X), a path forest on m^2 vertices.
struct PGArtifact {
  ThreePartitionInstance instance;
  DerivedSets sets;
  Graph graph{};
  Permutation perm{};
  /// n blocks of length B', then the leftover values in decreasing order.
  SegmentPlan plan{};
  /// paths[j] lists component Q_{j+1} end to end, starting at its smaller
  /// endpoint id.
  std::vector<VertexPath> paths{};

  std::int64_t m() const { return instance.max_element(); }
};

PGArtifact construct_px(const ThreePartitionInstance& inst);

/// Forward map: runs sized by the shifted triples plus the leftover
/// components have orders 1, 3, ..., 2m-1; source i is the center of the
/// i-th largest run. Length m.
BurningSchedule partition_to_schedule_pg(const PGArtifact& art, const Partition3& p);

/// Reverse map for a complete schedule of length m.
Partition3 schedule_to_partition_pg(const PGArtifact& art, const BurningSchedule& s);

}  // namespace burn
