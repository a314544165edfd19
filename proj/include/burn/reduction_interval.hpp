#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "burn/burning.hpp"
#include "burn/graph.hpp"
#include "burn/partition.hpp"

namespace burn {

/// Odd-shifted view of an instance shared by both reductions.
struct DerivedSets {
  /// {2a - 1 : a in X}, in the instance's element order.
  std::vector<std::int64_t> shifted;
  /// 2B - 3.
  std::int64_t shifted_target = 0;
  /// {1, 3, ..., 2m - 1}.
  std::vector<std::int64_t> odd_universe;
  /// odd_universe minus shifted, ascending.
  std::vector<std::int64_t> leftover;
};

DerivedSets derive_sets(const ThreePartitionInstance& inst);

enum class SegmentKind { q, q_prime, t };

/// A labeled run of the spine P_I. `index` is 1-based within its kind.
struct SpineSegment {
  SegmentKind kind = SegmentKind::q;
  std::size_t index = 0;
  std::size_t begin = 0;  // position on P_I
  std::size_t length = 0;

  bool operator==(const SpineSegment&) const = default;
};

/// Pendant leaf of a comb and the spine vertex it hangs from.
struct CombLeaf {
  Vertex leaf = 0;
  Vertex host = 0;
  bool operator==(const CombLeaf&) const = default;
};

/**
 * The interval graph IG(X).
 *
 * Spine vertices carry ids 0..|P_I|-1 in P_I order, so a spine vertex's id
 * is its position. Leaves follow, comb by comb (T_1 first), left to right.
 */
struct IGArtifact {
  ThreePartitionInstance instance;
  DerivedSets sets;
  Graph graph{};
  std::size_t spine_length = 0;
  /// Q_1, T_1, ..., Q_n, T_n, Q'_1, T_{n+1}, ..., Q'_k, T_{n+k}, ..., T_{m+1}.
  std::vector<SpineSegment> segments{};
  /// combs[j - 1] holds the leaves of T_j.
  std::vector<std::vector<CombLeaf>> combs{};

  std::int64_t m() const { return instance.max_element(); }
  const SpineSegment& t_segment(std::size_t j) const;
  VertexPath spine() const;
};

IGArtifact construct_ig(const ThreePartitionInstance& inst);

/// Spine position p -> [20p, 20p+30]; leaf on position p -> [20p+12, 20p+18].
IntervalRepresentation emit_interval_representation(const IGArtifact& art);

/// The comb T^c_j as a standalone graph: spine of T_j first, then its leaves.
Graph comb_graph(const IGArtifact& art, std::size_t j);

/// Forward map: split each Q_i by its triple, then place source i at the
/// (2m-i+2)-th vertex of the i-th largest subpath. Length 2m+1.
BurningSchedule partition_to_schedule(const IGArtifact& art, const Partition3& p);

/// Reverse map for a complete schedule of length 2m+1.
Partition3 schedule_to_partition(const IGArtifact& art, const BurningSchedule& s);

}  // namespace burn
