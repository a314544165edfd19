#include "burn/burning.hpp"

#include <algorithm>
#include <string>

#include "burn/errors.hpp"

namespace burn {

namespace {

void check_sources(const Graph& g, const BurningSchedule& s) {
  if (s.sources.empty()) throw InvalidInput("schedule has no fire sources");
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : s.sources) {
    if (v >= g.order()) {
      throw InvalidInput("fire source " + std::to_string(v) + " is not a vertex");
    }
    if (seen[v]) throw InvalidInput("fire source " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

}  // namespace

BurnProcess::BurnProcess(const Graph& g) : graph_(&g), burn_round_(g.order(), 0) {}

void BurnProcess::place(Vertex source) {
  if (source >= graph_->order()) {
    throw InvalidInput("fire source " + std::to_string(source) + " is not a vertex");
  }
  if (burnt(source)) {
    throw ScheduleRejected("fire source " + std::to_string(source) + " is already burnt at round " +
                           std::to_string(round_ + 1));
  }
  advance(&source);
}

void BurnProcess::spread() { advance(nullptr); }

void BurnProcess::advance(const Vertex* source) {
  ++round_;
  std::vector<Vertex> next;
  for (Vertex v : frontier_) {
    for (Vertex w : graph_->neighbors(v)) {
      if (burn_round_[w] == 0) {
        burn_round_[w] = round_;
        next.push_back(w);
      }
    }
  }
  if (source != nullptr && burn_round_[*source] == 0) {
    burn_round_[*source] = round_;
    next.push_back(*source);
  }
  burnt_count_ += next.size();
  frontier_.swap(next);
}

std::vector<std::uint32_t> BurnProcess::distances_to_burnt() const {
  std::vector<Vertex> burning;
  for (Vertex v = 0; v < graph_->order(); ++v) {
    if (burnt(v)) burning.push_back(v);
  }
  if (burning.empty()) return std::vector<std::uint32_t>(graph_->order(), kUnreachable);
  return bfs_distances(*graph_, burning);
}

VertexSet BurnOutcome::burned_by_round(std::size_t t) const {
  VertexSet out(burn_round.size());
  for (std::size_t v = 0; v < burn_round.size(); ++v) {
    if (burn_round[v] != 0 && burn_round[v] <= t) out.insert(static_cast<Vertex>(v));
  }
  return out;
}

BurnOutcome simulate(const Graph& g, const BurningSchedule& s, SpreadMode mode) {
  check_sources(g, s);
  BurnProcess process(g);
  for (Vertex v : s.sources) process.place(v);
  if (mode == SpreadMode::to_completion) {
    while (!process.complete() && !process.stalled()) process.spread();
  }
  BurnOutcome out;
  out.rounds_used = process.round();
  out.complete = process.complete();
  out.burn_round = process.burn_rounds();
  return out;
}

std::vector<VertexSet> clusters(const Graph& g, const BurningSchedule& s) {
  check_sources(g, s);
  const std::size_t k = s.length();
  std::vector<VertexSet> out;
  out.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) {
    const Vertex source[] = {s.sources[i - 1]};
    out.push_back(ball(g, source, k - i));
  }
  return out;
}

bool verify_schedule(const Graph& g, const BurningSchedule& s) {
  check_sources(g, s);
  const std::size_t k = s.length();
  VertexSet covered(g.order());
  for (std::size_t i = 1; i <= k; ++i) {
    const Vertex source[] = {s.sources[i - 1]};
    covered |= ball(g, source, k - i);
  }
  return covered.full();
}

Vertex farthest_unburnt(const Graph& g, const BurnProcess& process) {
  auto dist = process.distances_to_burnt();
  Vertex best = kUnreachable;
  std::uint32_t best_dist = 0;
  bool unreached = false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (process.burnt(v)) continue;
    if (dist[v] == kUnreachable) {
      unreached = true;
      break;
    }
    if (best == kUnreachable || dist[v] > best_dist) {
      best = v;
      best_dist = dist[v];
    }
  }
  if (!unreached) {
    if (best == kUnreachable) throw InvalidInput("graph is already completely burnt");
    return best;
  }

  // Some component has no fire yet: start it at the radical center of the
  // largest such component.
  auto labels = component_labels(g);
  std::vector<std::vector<Vertex>> members;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (labels[v] >= members.size()) members.resize(labels[v] + 1);
    members[labels[v]].push_back(v);
  }
  const std::vector<Vertex>* largest = nullptr;
  for (const auto& comp : members) {
    if (dist[comp.front()] != kUnreachable) continue;
    if (largest == nullptr || comp.size() > largest->size()) largest = &comp;
  }
  auto sub = induced_subgraph(g, *largest);
  return (*largest)[radical_center(sub)];
}

BurningSchedule greedy_burn(const Graph& g) {
  if (g.order() == 0) throw InvalidInput("cannot burn an empty graph");
  BurnProcess process(g);
  BurningSchedule s;
  while (!process.complete()) {
    Vertex next = farthest_unburnt(g, process);
    process.place(next);
    s.sources.push_back(next);
  }
  return s;
}

}  // namespace burn
