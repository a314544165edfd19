// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "burn/burning.hpp"
#include "burn/exact.hpp"
#include "burn/grid.hpp"
#include "burn/partition.hpp"
#include "burn/reduction_interval.hpp"
#include "burn/reduction_permutation.hpp"
#include "burn/sampling.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace burn;

namespace {

using Values = std::vector<std::int64_t>;
using Clock = std::chrono::steady_clock;

// A criterion body returns an empty string on success or the first failure.
using Check = std::function<std::string()>;

#define EXPECT(cond)                                       \
  do {                                                     \
    if (!(cond)) return std::string("failed: ") + #cond;   \
  } while (0)

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t ceil_sqrt(std::size_t n) {
  std::size_t r = 0;
  while (r * r < n) ++r;
  return r;
}

bool pairwise_disjoint(const std::vector<VertexSet>& cs) {
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b)
      if (cs[a].intersects(cs[b])) return false;
  return true;
}

std::vector<Triple> normalized(Partition3 p) {
  for (auto& t : p.triples) std::sort(t.begin(), t.end());
  std::sort(p.triples.begin(), p.triples.end());
  return p.triples;
}

std::vector<std::size_t> component_orders(const Graph& g) {
  std::map<std::uint32_t, std::size_t> count;
  for (auto l : component_labels(g)) ++count[l];
  std::vector<std::size_t> out;
  for (auto [label, c] : count) out.push_back(c);
  return out;
}

bool single_path(const Graph& g) {
  if (!is_connected(g) || g.size() + 1 != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool path_forest_with(const Graph& g, const std::vector<std::size_t>& orders) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return g.size() + component_count(g) == g.order() && component_orders(g) == orders;
}

std::string ac1() {
  auto start = Clock::now();
  for (std::size_t n = 1; n <= 36; ++n) {
    auto g = build_path(n);
    auto r = exact_burning_number(g);
    EXPECT(r.k == ceil_sqrt(n));
    EXPECT(oracle::burns(g, r.witness.sources));
  }
  auto p9 = build_path(9);
  EXPECT(oracle::burns(p9, {2, 6, 8}));
  EXPECT(verify_schedule(p9, BurningSchedule{{2, 6, 8}}));
  EXPECT(simulate(p9, BurningSchedule{{2, 6, 8}}).rounds_used == 3);
  EXPECT(seconds_since(start) < 10.0);
  return {};
}

std::string ac2() {
  EXPECT(max_burnable(3) == 13);
  EXPECT(max_burnable(4) == 25);
  auto g = build_grid(41, 41);
  std::vector<Vertex> center{20 * 41 + 20};
  for (std::size_t k = 1; k <= 20; ++k) {
    EXPECT(max_burnable(k) == 2 * k * (k - 1) + 1);
    EXPECT(ball(g, center, k - 1).size() == max_burnable(k));
  }
  return {};
}

std::string ac3() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint64_t> side(1, 10000);
  for (int trial = 0; trial < 10000; ++trial) {
    GridSpec spec{side(rng), side(rng)};
    const std::uint64_t cells = spec.rows * spec.cols;
    std::uint64_t i = 1;
    while (2 * i * i * i + i < 3 * cells) ++i;
    const auto lb = grid_lower_bound(spec);
    EXPECT(lb == i);
    std::uint64_t c = 1;
    while (c * c * c < cells) ++c;
    EXPECT(lb >= c);
  }
  return {};
}

std::string ac4() {
  for (std::size_t l : {403u, 410u, 425u, 450u}) {
    auto start = Clock::now();
    auto r = burn_grid_2approx({l, l});
    const double took = seconds_since(start);
    EXPECT(simulate(build_grid(l, l), r.schedule).complete);
    EXPECT(r.rounds_used == r.schedule.length());
    EXPECT(r.rounds_used <= upper_bound_formula(l));
    EXPECT(r.rounds_used <= 2 * grid_lower_bound({l, l}));
    EXPECT(took < 30.0);
    std::printf("      l=%zu rounds=%zu lower=%zu upper=%zu (%.2fs)\n", l, r.rounds_used, r.lower_bound,
                r.upper_bound_formula, took);
  }
  return {};
}

std::string ac5() {
  auto art = construct_ig(validate_instance(Values{10, 11, 12, 14, 15, 16}));
  std::size_t counted = 0;
  for (const auto& seg : art.segments) counted += seg.length;
  std::size_t leaves = 0;
  for (const auto& c : art.combs) leaves += c.size();
  EXPECT(art.graph.order() == 7 * 16 * 16 + 6 * 16);
  EXPECT(art.graph.order() == 1888);
  EXPECT(counted + leaves == 1888);
  EXPECT(art.spine_length == 33 * 33);
  EXPECT(counted == 1089);
  for (std::size_t j = 1; j <= 17; ++j) EXPECT(art.t_segment(j).length == 67 - 2 * j);
  EXPECT(build_interval_graph(emit_interval_representation(art)) == art.graph);
  return {};
}

std::string ac6() {
  auto start = Clock::now();
  auto inst = validate_instance(Values{10, 11, 12, 14, 15, 16});
  auto solved = solve_3partition(inst);
  EXPECT(solved.partition);
  EXPECT(normalized(*solved.partition) == (std::vector<Triple>{{10, 14, 15}, {11, 12, 16}}));
  for (const auto& t : solved.partition->triples) EXPECT(t[0] + t[1] + t[2] == 39);
  auto art = construct_ig(inst);
  auto s = partition_to_schedule(art, *solved.partition);
  EXPECT(s.length() == 33);
  auto out = simulate(art.graph, s);
  EXPECT(out.complete);
  EXPECT(out.rounds_used == 33);
  EXPECT(!out.burned_by_round(32).full());
  EXPECT(seconds_since(start) < 5.0);
  return {};
}

std::string ac7() {
  auto inst = validate_instance(Values{10, 11, 12, 14, 15, 16});
  auto art = construct_ig(inst);
  auto s = partition_to_schedule(art, Partition3{{{10, 14, 15}, {11, 12, 16}}});
  auto p = schedule_to_partition(art, s);
  EXPECT(verify_partition(inst, p));
  for (const auto& t : p.triples) EXPECT(t[0] + t[1] + t[2] == 39);

  auto pool = fixtures::planted_instances(7, 20, 30);
  std::size_t trips = 0;
  for (const auto& x : pool) {
    auto in = validate_instance(x);
    EXPECT(in.max_element() <= 30);
    auto a = construct_ig(in);
    auto sol = solve_3partition(in);
    EXPECT(sol.partition);
    auto w = partition_to_schedule(a, *sol.partition);
    EXPECT(simulate(a.graph, w).complete);
    auto back = schedule_to_partition(a, w);
    EXPECT(verify_partition(in, back));
    ++trips;
  }
  EXPECT(trips >= 20);
  return {};
}

std::string ac8() {
  EXPECT(path_permutation(1, 8) == (Permutation{3, 1, 5, 2, 7, 4, 8, 6}));
  for (std::size_t t = 1; t <= 9; ++t) {
    auto p = path_permutation(1, t);
    EXPECT(single_path(Graph::from_edges(t, oracle::inversion_edges(p))));
  }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> count(1, 12);
    std::uniform_int_distribution<std::size_t> len(1, 15);
    std::vector<std::size_t> lengths(count(rng));
    for (auto& l : lengths) l = len(rng);
    auto f = forest_permutation(lengths);
    EXPECT(path_forest_with(Graph::from_edges(f.perm.size(), oracle::inversion_edges(f.perm)), lengths));
  }
  return {};
}

std::string ac9() {
  auto inst = validate_instance(Values{10, 11, 12, 14, 15, 16});
  auto art = construct_px(inst);
  EXPECT(art.graph.order() == 256);
  EXPECT(component_count(art.graph) == 12);
  EXPECT(path_forest_with(art.graph, {75, 75, 25, 17, 15, 13, 11, 9, 7, 5, 3, 1}));
  auto s = partition_to_schedule_pg(art, Partition3{{{10, 14, 15}, {11, 12, 16}}});
  auto out = simulate(art.graph, s);
  EXPECT(s.length() == 16);
  EXPECT(out.complete);
  EXPECT(out.rounds_used == 16);
  // A source of round i burns at most 2(k-i)+1 vertices of a path forest, so
  // 15 rounds reach at most 225 < 256 vertices.
  std::size_t reach = 0;
  for (std::size_t i = 1; i <= 15; ++i) reach += 2 * (15 - i) + 1;
  EXPECT(reach == 225);
  EXPECT(reach < art.graph.order());
  return {};
}

std::string ac10() {
  std::mt19937_64 rng(10);
  std::size_t agreements = 0;
  std::size_t rejected = 0;
  while (agreements < 1000) {
    std::uniform_int_distribution<std::size_t> n_dist(1, 50);
    std::uniform_real_distribution<double> p_dist(0.02, 0.3);
    auto g = random_graph(n_dist(rng), p_dist(rng), rng);
    std::uniform_int_distribution<std::size_t> len(1, std::min<std::size_t>(g.order(), 10));
    auto s = random_schedule(g, len(rng), rng);
    const bool covered = verify_schedule(g, s);
    try {
      const bool complete = simulate(g, s).complete;
      EXPECT(complete == covered);
      ++agreements;
    } catch (const ScheduleRejected&) {
      // Justified only if some source lies within i - j hops of an earlier x_j.
      auto d = oracle::all_pairs(g);
      bool justified = false;
      for (std::size_t i = 0; i < s.length() && !justified; ++i)
        for (std::size_t j = 0; j < i && !justified; ++j)
          if (d[s.sources[j]][s.sources[i]] <= i - j - 1) justified = true;
      EXPECT(justified);
      ++rejected;
    }
  }
  std::printf("      agreements=%zu rejected=%zu\n", agreements, rejected);
  return {};
}

std::string ac11() {
  for (std::size_t n : {4u, 9u}) {
    auto g = build_path(n);
    auto [k, optimal] = oracle::burning_number(g);
    EXPECT(k == ceil_sqrt(n));
    EXPECT(!optimal.empty());
    for (const auto& seq : optimal) EXPECT(pairwise_disjoint(clusters(g, BurningSchedule{seq})));
  }

  // Comb on a 7-vertex spine: spine 0..6, leaf 6+h on spine vertex h.
  std::vector<Edge> e;
  for (Vertex v = 0; v < 6; ++v) e.emplace_back(v, v + 1);
  for (Vertex h = 1; h <= 5; ++h) e.emplace_back(h, 6 + h);
  auto comb = Graph::from_edges(12, e);
  std::size_t complete = 0;
  bool disjoint_cover = false;
  for (std::size_t k = 2; k <= 4; ++k) {
    oracle::for_each_sequence(7, k, [&](const std::vector<Vertex>& seq) {
      BurningSchedule s{seq};
      if (!verify_schedule(comb, s)) return;
      ++complete;
      auto cs = clusters(comb, s);
      bool overlap = false;
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
          for (Vertex v = 0; v < 7; ++v) overlap = overlap || (cs[a].contains(v) && cs[b].contains(v));
      disjoint_cover = disjoint_cover || !overlap;
    });
  }
  EXPECT(!disjoint_cover);
  EXPECT(complete > 0);

  auto art = construct_ig(validate_instance(Values{10, 11, 12, 14, 15, 16}));
  for (std::size_t j = 1; j <= 17; ++j) {
    const std::size_t len = art.t_segment(j).length;
    BurningSchedule center{{static_cast<Vertex>((len - 1) / 2)}};
    auto on_path = simulate(build_path(len), center, SpreadMode::to_completion);
    auto on_comb = simulate(comb_graph(art, j), center, SpreadMode::to_completion);
    EXPECT(on_path.complete && on_comb.complete);
    EXPECT(on_path.rounds_used == on_comb.rounds_used);
  }
  return {};
}

}  // namespace

int main() {
  const std::pair<const char*, Check> criteria[] = {
      {"AC1 path burning number equals ceil(sqrt(n)) for n <= 36", ac1},
      {"AC2 ball growth 2k(k-1)+1 matches BFS on a 41x41 grid", ac2},
      {"AC3 grid lower bound is the minimal cubic solution", ac3},
      {"AC4 subgrid burner within the upper bound and factor 2", ac4},
      {"AC5 IG(X) sizes and interval representation", ac5},
      {"AC6 partition maps to a 33-round IG(X) schedule", ac6},
      {"AC7 IG(X) schedules map back to partitions", ac7},
      {"AC8 path permutations induce the prescribed path forests", ac8},
      {"AC9 P(X) construction and 16-round schedule", ac9},
      {"AC10 coverage check agrees with simulation", ac10},
      {"AC11 cluster structure on paths and combs", ac11},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    auto start = Clock::now();
    std::string why;
    try {
      why = check();
    } catch (const std::exception& ex) {
      why = std::string("exception: ") + ex.what();
    }
    const double took = seconds_since(start);
    if (why.empty()) {
      std::printf("PASS %s (%.2fs)\n", name, took);
    } else {
      ++failed;
      std::printf("FAIL %s (%.2fs): %s\n", name, took, why.c_str());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
