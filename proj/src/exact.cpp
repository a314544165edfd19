#include "burn/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "burn/errors.hpp"

namespace burn {

namespace {

constexpr std::uint16_t kFar = 0xFFFF;

struct DistanceTable {
  std::size_t n = 0;
  std::vector<std::uint16_t> d;

  explicit DistanceTable(const Graph& g) : n(g.order()), d(n * n, kFar) {
    for (Vertex s = 0; s < n; ++s) {
      const Vertex source[] = {s};
      auto row = bfs_distances(g, source);
      for (Vertex v = 0; v < n; ++v) {
        if (row[v] != kUnreachable) d[s * n + v] = static_cast<std::uint16_t>(row[v]);
      }
    }
  }
  const std::uint16_t* row(Vertex v) const { return d.data() + static_cast<std::size_t>(v) * n; }
};

// max over vertices of |N_r[v]| for r = 0..max_radius.
std::vector<std::size_t> largest_balls(const DistanceTable& dt, std::size_t max_radius) {
  std::vector<std::size_t> best(max_radius + 1, 0);
  std::vector<std::size_t> hist(max_radius + 1);
  for (Vertex x = 0; x < dt.n; ++x) {
    std::fill(hist.begin(), hist.end(), 0);
    const auto* row = dt.row(x);
    for (Vertex v = 0; v < dt.n; ++v) {
      if (row[v] <= max_radius) ++hist[row[v]];
    }
    std::size_t acc = 0;
    for (std::size_t r = 0; r <= max_radius; ++r) {
      acc += hist[r];
      best[r] = std::max(best[r], acc);
    }
  }
  return best;
}

std::vector<bool> diametral_mask(const Graph& g) {
  std::vector<bool> mask(g.order(), false);
  for (const auto& path : diametral_paths_by_component(g)) {
    for (Vertex v : path) mask[v] = true;
  }
  return mask;
}

std::size_t ceil_sqrt(std::size_t x) {
  std::size_t r = 0;
  while (r * r < x) ++r;
  return r;
}

struct BudgetSpent {};

/**
 * Cover search. A schedule of k rounds burns g iff the clusters
 * N_{k-i}[x_i] cover V(G), so rounds are filled in any order: each node picks
 * the uncovered vertex with the fewest viable placements and branches on the
 * (round, source) pairs whose cluster contains it.
 */
class CoverSearch {
 public:
  CoverSearch(const Graph& g, const DistanceTable& dt, std::size_t k, std::uint64_t budget)
      : g_(g),
        dt_(dt),
        n_(g.order()),
        k_(k),
        budget_(budget),
        on_path_(diametral_mask(g)),
        max_ball_(largest_balls(dt, k - 1)),
        cover_(n_, 0),
        assigned_(k + 1, kUnreachable),
        uncovered_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      if (on_path_[v]) ++uncovered_on_path_;
    }
    std::mt19937_64 rng(0x5eed);
    keys_.resize(n_);
    for (auto& key : keys_) key = rng();
  }

  bool run() { return descend(); }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Vertex>& assigned() const { return assigned_; }

 private:
  struct Placement {
    std::size_t round;
    Vertex source;
    std::size_t gain;
  };

  std::size_t radius(std::size_t round) const { return k_ - round; }

  void apply(const Placement& p, int delta) {
    const auto* row = dt_.row(p.source);
    const std::size_t r = radius(p.round);
    for (Vertex v = 0; v < n_; ++v) {
      if (row[v] > r) continue;
      if (delta > 0) {
        if (cover_[v]++ == 0) {
          --uncovered_;
          if (on_path_[v]) --uncovered_on_path_;
        }
      } else {
        if (--cover_[v] == 0) {
          ++uncovered_;
          if (on_path_[v]) ++uncovered_on_path_;
        }
      }
    }
    assigned_[p.round] = delta > 0 ? p.source : kUnreachable;
  }

  bool descend() {
    if (uncovered_ == 0) return true;
    if (++nodes_ > budget_) throw BudgetSpent{};

    std::vector<std::size_t> free_rounds;
    std::size_t cap_all = 0;
    std::size_t cap_path = 0;
    for (std::size_t i = 1; i <= k_; ++i) {
      if (assigned_[i] != kUnreachable) continue;
      free_rounds.push_back(i);
      cap_all += max_ball_[radius(i)];
      cap_path += 2 * radius(i) + 1;
    }
    if (free_rounds.empty() || uncovered_ > cap_all || uncovered_on_path_ > cap_path) return false;

    const std::size_t max_r = radius(free_rounds.front());
    // Newly covered counts for every source and every radius up to max_r.
    std::vector<std::size_t> hist(max_r + 1);
    std::vector<std::size_t> hist_path(max_r + 1);
    std::vector<std::size_t> viable_at_least(max_r + 2);
    std::vector<Placement> viable;
    std::vector<std::size_t> options(n_, 0);

    for (Vertex x = 0; x < n_; ++x) {
      std::fill(hist.begin(), hist.end(), 0);
      std::fill(hist_path.begin(), hist_path.end(), 0);
      const auto* row = dt_.row(x);
      for (Vertex v = 0; v < n_; ++v) {
        if (cover_[v] != 0 || row[v] > max_r) continue;
        ++hist[row[v]];
        if (on_path_[v]) ++hist_path[row[v]];
      }
      for (std::size_t r = 1; r <= max_r; ++r) {
        hist[r] += hist[r - 1];
        hist_path[r] += hist_path[r - 1];
      }
      std::fill(viable_at_least.begin(), viable_at_least.end(), 0);
      for (std::size_t round : free_rounds) {
        const std::size_t r = radius(round);
        const std::size_t gain = hist[r];
        if (gain == 0) continue;
        if (uncovered_ - gain > cap_all - max_ball_[r]) continue;
        if (uncovered_on_path_ - hist_path[r] > cap_path - (2 * r + 1)) continue;
        viable.push_back({round, x, gain});
        ++viable_at_least[r];
      }
      for (std::size_t r = max_r; r-- > 0;) viable_at_least[r] += viable_at_least[r + 1];
      for (Vertex v = 0; v < n_; ++v) {
        if (cover_[v] == 0 && row[v] <= max_r) options[v] += viable_at_least[row[v]];
      }
    }

    Vertex pivot = kUnreachable;
    for (Vertex v = 0; v < n_; ++v) {
      if (cover_[v] != 0) continue;
      if (options[v] == 0) return false;
      if (pivot == kUnreachable || options[v] < options[pivot]) pivot = v;
    }

    const auto* pivot_row = dt_.row(pivot);
    std::vector<Placement> branches;
    for (const auto& p : viable) {
      if (pivot_row[p.source] <= radius(p.round)) branches.push_back(p);
    }
    std::sort(branches.begin(), branches.end(), [](const Placement& a, const Placement& b) {
      if (a.gain != b.gain) return a.gain > b.gain;
      if (a.round != b.round) return a.round < b.round;
      return a.source < b.source;
    });

    // Two placements in the same round that cover the same new vertices lead
    // to identical subproblems; keep the first.
    std::map<std::pair<std::size_t, std::uint64_t>, std::vector<std::vector<Vertex>>> seen;
    for (const auto& p : branches) {
      auto fresh = newly_covered(p);
      std::uint64_t h = 0;
      for (Vertex v : fresh) h += keys_[v];
      auto& bucket = seen[{p.round, h}];
      if (std::find(bucket.begin(), bucket.end(), fresh) != bucket.end()) continue;
      bucket.push_back(std::move(fresh));

      apply(p, +1);
      if (descend()) return true;
      apply(p, -1);
    }
    return false;
  }

  std::vector<Vertex> newly_covered(const Placement& p) const {
    std::vector<Vertex> out;
    const auto* row = dt_.row(p.source);
    const std::size_t r = radius(p.round);
    for (Vertex v = 0; v < n_; ++v) {
      if (cover_[v] == 0 && row[v] <= r) out.push_back(v);
    }
    return out;
  }

  const Graph& g_;
  const DistanceTable& dt_;
  std::size_t n_;
  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<bool> on_path_;
  std::vector<std::size_t> max_ball_;
  std::vector<std::uint32_t> cover_;
  std::vector<Vertex> assigned_;
  std::size_t uncovered_;
  std::size_t uncovered_on_path_ = 0;
  std::vector<std::uint64_t> keys_;
};

// Turns a covering assignment into an executable schedule. A round whose
// assigned source is already burnt has its cluster inside an earlier one, so
// any unburnt vertex may replace it.
BurningSchedule to_schedule(const Graph& g, const std::vector<Vertex>& assigned, std::size_t k) {
  BurnProcess process(g);
  BurningSchedule s;
  for (std::size_t round = 1; round <= k && !process.complete(); ++round) {
    Vertex x = assigned[round];
    if (x == kUnreachable || process.burnt(x)) {
      x = 0;
      while (process.burnt(x)) ++x;
    }
    process.place(x);
    s.sources.push_back(x);
  }
  if (!process.complete()) throw Error("internal: covering assignment did not burn the graph");
  return s;
}

void check_exact_input(const Graph& g) {
  if (g.order() == 0) throw InvalidInput("cannot burn an empty graph");
  if (g.order() > kExactMaxOrder) {
    throw InvalidInput("exact search supports at most " + std::to_string(kExactMaxOrder) +
                       " vertices");
  }
}

BurnSearchResult search_with(const Graph& g, const DistanceTable& dt, std::size_t k,
                             std::uint64_t budget) {
  BurnSearchResult out;
  if (k >= g.order()) {
    // Any unburnt vertex each round finishes within n rounds.
    out.status = SearchStatus::found;
    out.witness = greedy_burn(g);
    return out;
  }
  CoverSearch search(g, dt, k, budget);
  try {
    bool ok = search.run();
    out.status = ok ? SearchStatus::found : SearchStatus::infeasible;
    if (ok) out.witness = to_schedule(g, search.assigned(), k);
  } catch (const BudgetSpent&) {
    out.status = SearchStatus::budget_exhausted;
  }
  out.nodes_explored = search.nodes();
  return out;
}

}  // namespace

std::size_t burning_lower_bound(const Graph& g) {
  if (g.order() == 0) throw InvalidInput("cannot burn an empty graph");
  std::size_t on_paths = 0;
  for (const auto& path : diametral_paths_by_component(g)) on_paths += path.size();
  std::size_t bound = ceil_sqrt(on_paths);

  if (g.order() <= kExactMaxOrder) {
    DistanceTable dt(g);
    auto balls = largest_balls(dt, g.order() - 1);
    std::size_t k = 0;
    std::size_t reach = 0;
    while (reach < g.order()) reach += balls[k++];
    bound = std::max(bound, k);
  }
  return std::max<std::size_t>(bound, 1);
}

BurnSearchResult can_burn_in(const Graph& g, std::size_t k, std::uint64_t node_budget) {
  check_exact_input(g);
  if (k == 0) throw InvalidInput("round count must be at least 1");
  DistanceTable dt(g);
  return search_with(g, dt, k, node_budget);
}

ExactResult exact_burning_number(const Graph& g, std::uint64_t node_budget) {
  check_exact_input(g);
  DistanceTable dt(g);
  const std::size_t lower = burning_lower_bound(g);
  BurningSchedule upper = greedy_burn(g);

  ExactResult out;
  for (std::size_t k = lower; k < upper.length(); ++k) {
    auto res = search_with(g, dt, k, node_budget - out.nodes_explored);
    out.nodes_explored += res.nodes_explored;
    if (res.status == SearchStatus::budget_exhausted) {
      throw BudgetExhausted("exact search exceeded " + std::to_string(node_budget) +
                            " nodes while testing k=" + std::to_string(k));
    }
    if (res.status == SearchStatus::found) {
      out.k = res.witness->length();
      out.witness = std::move(*res.witness);
      return out;
    }
  }
  out.k = upper.length();
  out.witness = std::move(upper);
  return out;
}

}  // namespace burn
