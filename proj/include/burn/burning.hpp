#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "burn/graph.hpp"

namespace burn {

/// Fire sources in round order: sources[t - 1] is placed in round t.
struct BurningSchedule {
  std::vector<Vertex> sources;

  std::size_t length() const { return sources.size(); }
  bool operator==(const BurningSchedule&) const = default;
};

/**
 * Round-by-round burning state.
 *
 * Each round first places a fire source, which must be unburnt at the end of
 * the previous round, and then spreads fire one hop from everything burnt by
 * the previous round. The new source itself does not spread until the next
 * round.
 */
class BurnProcess {
 public:
  explicit BurnProcess(const Graph& g);

  /// Runs one round with `source`. Throws ScheduleRejected if it is burnt.
  void place(Vertex source);
  /// Runs one round without a new source.
  void spread();

  bool burnt(Vertex v) const { return burn_round_[v] != 0; }
  std::size_t round() const { return round_; }
  std::size_t burnt_count() const { return burnt_count_; }
  bool complete() const { return burnt_count_ == graph_->order(); }
  /// True when another spread() cannot burn anything new.
  bool stalled() const { return frontier_.empty(); }

  /// Round in which each vertex caught fire, 0 for unburnt.
  const std::vector<std::size_t>& burn_rounds() const { return burn_round_; }
  /// Distance of every vertex to the burnt set (0 on burnt vertices).
  std::vector<std::uint32_t> distances_to_burnt() const;

 private:
  void advance(const Vertex* source);

  const Graph* graph_;
  std::vector<std::size_t> burn_round_;
  std::vector<Vertex> frontier_;
  std::size_t round_ = 0;
  std::size_t burnt_count_ = 0;
};

struct BurnOutcome {
  std::size_t rounds_used = 0;
  bool complete = false;
  /// Round in which each vertex caught fire, 0 if never.
  std::vector<std::size_t> burn_round;

  /// Cumulative burnt set at the end of round t (1-based).
  VertexSet burned_by_round(std::size_t t) const;
};

enum class SpreadMode {
  /// Stop after the last source's round.
  schedule_only,
  /// Keep spreading without new sources until complete or stalled.
  to_completion,
};

BurnOutcome simulate(const Graph& g, const BurningSchedule& s,
                     SpreadMode mode = SpreadMode::schedule_only);

/// Coverage check: the union of G.N_{k-i}[x_i] over all sources is V(G).
bool verify_schedule(const Graph& g, const BurningSchedule& s);

/// Burning cluster of each source: clusters[i - 1] = G.N_{k-i}[x_i].
std::vector<VertexSet> clusters(const Graph& g, const BurningSchedule& s);

/// Farthest-first heuristic schedule; always complete.
BurningSchedule greedy_burn(const Graph& g);

/// Unburnt vertex farthest from the burnt set, smallest id on ties. Vertices
/// in components without fire rank above all others; among those the radical
/// center of the largest such component is chosen.
Vertex farthest_unburnt(const Graph& g, const BurnProcess& process);

}  // namespace burn
