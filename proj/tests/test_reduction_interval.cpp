#include <doctest.h>

#include <algorithm>
#include <map>

#include "burn/burning.hpp"
#include "burn/detail/tiling.hpp"
#include "burn/errors.hpp"
#include "burn/partition.hpp"
#include "burn/reduction_interval.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace burn;

namespace {

using Values = std::vector<std::int64_t>;

const IGArtifact& example() {
  static const IGArtifact art = construct_ig(validate_instance(Values{10, 11, 12, 14, 15, 16}));
  return art;
}

Partition3 example_partition() { return Partition3{{{10, 14, 15}, {11, 12, 16}}}; }

// Spine 0..t-1, leaf t+h-1 hanging from spine vertex h for h = 1..t-2.
Graph standalone_comb(std::size_t t) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < t; ++v) e.emplace_back(v, v + 1);
  for (Vertex h = 1; h + 1 < t; ++h) e.emplace_back(h, static_cast<Vertex>(t + h - 1));
  return Graph::from_edges(2 * t - 2, e);
}

ExtractionError::Kind extraction_kind(const IGArtifact& art, const BurningSchedule& s) {
  try {
    schedule_to_partition(art, s);
  } catch (const ExtractionError& e) {
    return e.kind();
  }
  FAIL("extraction succeeded");
  return ExtractionError::Kind::precondition;
}

}  // namespace

TEST_CASE("derive_sets on the worked example") {
  auto inst = validate_instance(Values{10, 11, 12, 14, 15, 16});
  auto sets = derive_sets(inst);
  Values shifted = sets.shifted;
  std::sort(shifted.begin(), shifted.end());
  CHECK(shifted == Values{19, 21, 23, 27, 29, 31});
  CHECK(sets.shifted_target == 75);
  CHECK(sets.leftover == Values{1, 3, 5, 7, 9, 11, 13, 15, 17, 25});
  CHECK(sets.leftover.size() == 10);
  CHECK(sets.odd_universe.size() == 16);

  for (const auto& x : fixtures::planted_instances(81, 30, 40)) {
    auto in = validate_instance(x);
    auto d = derive_sets(in);
    std::int64_t total = 0;
    for (auto v : d.shifted) total += v;
    REQUIRE(total == 2 * in.n() * in.target() - 3 * in.n());
    REQUIRE(static_cast<std::int64_t>(d.leftover.size()) == in.slack());
    for (auto v : d.leftover) REQUIRE(v % 2 == 1);
  }
}

TEST_CASE("construct_ig on the worked example") {
  const auto& art = example();
  CHECK(art.graph.order() == 7 * 16 * 16 + 6 * 16);
  CHECK(art.graph.order() == 1888);
  CHECK(art.spine_length == 33 * 33);
  CHECK(art.graph.size() + 1 == art.graph.order());
  CHECK(is_connected(art.graph));

  for (std::size_t j = 1; j <= 17; ++j) {
    CHECK(art.t_segment(j).length == 65 - 2 * (j - 1));
    CHECK(art.combs[j - 1].size() == art.t_segment(j).length - 2);
  }
  CHECK(art.combs[0].size() == 63);

  // Q1 T1 Q2 T2 Q'1 T3 ... Q'10 T12 T13 ... T17
  std::vector<std::pair<SegmentKind, std::size_t>> order;
  for (const auto& seg : art.segments) order.emplace_back(seg.kind, seg.index);
  std::vector<std::pair<SegmentKind, std::size_t>> expect{{SegmentKind::q, 1}, {SegmentKind::t, 1},
                                                          {SegmentKind::q, 2}, {SegmentKind::t, 2}};
  for (std::size_t j = 1; j <= 10; ++j) {
    expect.emplace_back(SegmentKind::q_prime, j);
    expect.emplace_back(SegmentKind::t, 2 + j);
  }
  for (std::size_t j = 13; j <= 17; ++j) expect.emplace_back(SegmentKind::t, j);
  CHECK(order == expect);

  std::vector<std::size_t> q_prime;
  std::size_t at = 0;
  for (const auto& seg : art.segments) {
    CHECK(seg.begin == at);
    at += seg.length;
    if (seg.kind == SegmentKind::q) CHECK(seg.length == 75);
    if (seg.kind == SegmentKind::q_prime) q_prime.push_back(seg.length);
  }
  CHECK(q_prime == std::vector<std::size_t>{25, 17, 15, 13, 11, 9, 7, 5, 3, 1});

  // Caterpillar: removing the leaves leaves exactly the spine path.
  CHECK(is_path_in(art.graph, art.spine()));
  for (const auto& comb : art.combs)
    for (const auto& leaf : comb) CHECK(art.graph.degree(leaf.leaf) == 1);
}

TEST_CASE("smallest legal instance") {
  std::size_t smallest = 0;
  Values best;
  for (std::int64_t a = 1; a <= 20; ++a)
    for (std::int64_t b = a + 1; b <= 20; ++b)
      for (std::int64_t c = b + 1; c <= 20; ++c) {
        try {
          validate_instance(Values{a, b, c});
        } catch (const InvalidInstance&) {
          continue;
        }
        auto s = static_cast<std::size_t>(a + b + c);
        if (smallest == 0 || s < smallest) {
          smallest = s;
          best = {a, b, c};
        }
      }
  CHECK(best == Values{4, 5, 6});
  auto art = construct_ig(validate_instance(best));
  CHECK(art.graph.order() == 7 * 36 + 36);
  CHECK(art.spine_length == 169);
  CHECK(art.sets.leftover == Values{1, 3, 5});
}

TEST_CASE("IG(X) size formulas hold for random instances") {
  for (const auto& x : fixtures::planted_instances(83, 25, 30)) {
    auto art = construct_ig(validate_instance(x));
    const auto m = static_cast<std::size_t>(art.m());
    REQUIRE(art.graph.order() == 7 * m * m + 6 * m);
    REQUIRE(art.spine_length == (2 * m + 1) * (2 * m + 1));
    REQUIRE(longest_shortest_path(art.graph).size() == art.spine_length);
  }
}

TEST_CASE("interval representation") {
  const auto& art = example();
  auto rep = emit_interval_representation(art);
  REQUIRE(rep.size() == art.graph.order());
  for (std::size_t p = 0; p + 1 < art.spine_length; ++p) {
    CHECK(std::max(rep[p].left, rep[p + 1].left) == static_cast<std::int64_t>(20 * p + 20));
    CHECK(std::min(rep[p].right, rep[p + 1].right) == static_cast<std::int64_t>(20 * p + 30));
  }
  for (const auto& comb : art.combs) {
    for (const auto& [leaf, host] : comb) {
      CHECK(rep[leaf].left > static_cast<std::int64_t>(20 * host + 10));
      CHECK(rep[leaf].right < static_cast<std::int64_t>(20 * host + 20));
    }
  }
  CHECK(build_interval_graph(rep) == art.graph);

  for (const auto& x : fixtures::planted_instances(85, 10, 30)) {
    auto a = construct_ig(validate_instance(x));
    REQUIRE(build_interval_graph(emit_interval_representation(a)) == a.graph);
  }
}

TEST_CASE("partition_to_schedule on the worked example") {
  const auto& art = example();
  auto s = partition_to_schedule(art, example_partition());
  CHECK(s.length() == 33);
  CHECK(verify_schedule(art.graph, s));
  auto out = simulate(art.graph, s);
  CHECK(out.complete);
  CHECK(out.rounds_used == 33);
  CHECK(s.sources[0] == art.t_segment(1).begin + 32);

  // Cluster orders on the spine are exactly 1, 3, ..., 65.
  std::vector<std::size_t> orders;
  for (const auto& c : clusters(art.graph, s)) {
    std::size_t on_spine = 0;
    for (Vertex v : c.members())
      if (v < art.spine_length) ++on_spine;
    orders.push_back(on_spine);
  }
  for (std::size_t i = 0; i < orders.size(); ++i) CHECK(orders[i] == 65 - 2 * i);

  CHECK_THROWS_AS(partition_to_schedule(art, Partition3{{{11, 14, 15}, {10, 12, 16}}}), InvalidInput);
}

TEST_CASE("schedule_to_partition round trip") {
  const auto& art = example();
  auto s = partition_to_schedule(art, example_partition());
  auto p = schedule_to_partition(art, s);
  CHECK(verify_partition(art.instance, p));
  for (const auto& t : p.triples) CHECK(t[0] + t[1] + t[2] == 39);

  // The triple order on Q_i need not match; any listing maps back.
  auto s2 = partition_to_schedule(art, Partition3{{{15, 10, 14}, {12, 16, 11}}});
  CHECK(verify_partition(art.instance, schedule_to_partition(art, s2)));

  std::size_t rounds = 0;
  for (const auto& x : fixtures::planted_instances(87, 24, 30)) {
    auto a = construct_ig(validate_instance(x));
    auto solved = solve_3partition(a.instance);
    REQUIRE(solved.partition);
    auto w = partition_to_schedule(a, *solved.partition);
    REQUIRE(simulate(a.graph, w).complete);
    REQUIRE(w.length() == static_cast<std::size_t>(2 * a.m() + 1));
    REQUIRE(verify_partition(a.instance, schedule_to_partition(a, w)));
    ++rounds;
  }
  CHECK(rounds == 24);
}

TEST_CASE("schedule_to_partition preconditions") {
  const auto& art = example();
  auto s = partition_to_schedule(art, example_partition());

  auto longer = s;
  for (Vertex v = 0; v < art.graph.order(); ++v) {
    if (std::find(longer.sources.begin(), longer.sources.end(), v) == longer.sources.end()) {
      longer.sources.push_back(v);
      break;
    }
  }
  CHECK(extraction_kind(art, longer) == ExtractionError::Kind::precondition);

  // Moving the first source onto a comb leaf breaks completeness.
  auto leafy = s;
  leafy.sources[0] = art.combs[0][31].leaf;
  CHECK_FALSE(verify_schedule(art.graph, leafy));
  CHECK(extraction_kind(art, leafy) == ExtractionError::Kind::precondition);

  auto dup = s;
  dup.sources[1] = dup.sources[0];
  CHECK(extraction_kind(art, dup) == ExtractionError::Kind::precondition);
}

TEST_CASE("tiling extraction rejects misshapen covers") {
  auto inst = validate_instance(Values{10, 11, 12, 14, 15, 16});
  using detail::TiledSegment;
  auto base = [] {
    std::vector<TiledSegment> f{{true, 75, {31, 21, 23}}, {true, 75, {29, 27, 19}}};
    for (std::size_t y : {25, 17, 15, 13, 11, 9, 7, 5, 3, 1}) f.push_back({false, y, {y}});
    return f;
  };
  auto good = detail::partition_from_tiling(inst, base());
  CHECK(verify_partition(inst, good));

  // Q'_1 tiled by 19 + 5 + 1: the 25-cluster sits on Q_2, so the exchange
  // leaves Q_2 with five clusters.
  auto swapped = base();
  swapped[0].cluster_sizes = {31, 25, 19};
  swapped[2].cluster_sizes = {21, 3, 1};
  CHECK_THROWS_AS(detail::partition_from_tiling(inst, swapped), ExtractionError);

  auto gap = base();
  gap[0].cluster_sizes = {31, 21};
  CHECK_THROWS_AS(detail::partition_from_tiling(inst, gap), ExtractionError);

  auto four = base();
  four[0].cluster_sizes = {31, 21, 21, 2};
  try {
    detail::partition_from_tiling(inst, four);
    FAIL("accepted four clusters on one Q");
  } catch (const ExtractionError& e) {
    CHECK(e.kind() == ExtractionError::Kind::not_optimal_shaped);
  }

  auto wrong = base();
  wrong[0].cluster_sizes = {31, 23, 21};
  wrong[1].cluster_sizes = {29, 25, 21};
  CHECK_THROWS_AS(detail::partition_from_tiling(inst, wrong), ExtractionError);
}

TEST_CASE("several sources on a comb spine overlap") {
  const std::size_t t = 7;
  auto comb = standalone_comb(t);
  REQUIRE(comb.order() == 12);
  std::size_t complete = 0;
  for (std::size_t k = 2; k <= 4; ++k) {
    std::vector<Vertex> seq;
    auto rec = [&](auto&& self) -> void {
      if (seq.size() == k) {
        BurningSchedule s{seq};
        if (!verify_schedule(comb, s)) return;
        ++complete;
        auto cs = clusters(comb, s);
        bool overlap = false;
        for (std::size_t a = 0; a < k && !overlap; ++a)
          for (std::size_t b = a + 1; b < k && !overlap; ++b)
            for (Vertex v = 0; v < t; ++v)
              if (cs[a].contains(v) && cs[b].contains(v)) overlap = true;
        REQUIRE(overlap);
        return;
      }
      for (Vertex v = 0; v < t; ++v) {
        if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
        seq.push_back(v);
        self(self);
        seq.pop_back();
      }
    };
    rec(rec);
  }
  CHECK(complete > 0);

  // The artifact's combs have the same shape.
  const auto& art = example();
  auto c17 = comb_graph(art, 17);
  CHECK(c17.order() == 2 * 33 - 2);
  CHECK(c17 == standalone_comb(33));
}

TEST_CASE("a centered source burns T_j and its comb together") {
  const auto& art = example();
  for (std::size_t j = 1; j <= 17; ++j) {
    const std::size_t len = art.t_segment(j).length;
    const auto center = static_cast<Vertex>((len - 1) / 2);
    auto path = simulate(build_path(len), BurningSchedule{{center}}, SpreadMode::to_completion);
    auto comb = simulate(comb_graph(art, j), BurningSchedule{{center}}, SpreadMode::to_completion);
    REQUIRE(path.complete);
    REQUIRE(comb.complete);
    CHECK(path.rounds_used == comb.rounds_used);
  }
}
