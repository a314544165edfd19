#include "burn/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "burn/burning.hpp"
#include "burn/errors.hpp"
#include "burn/exact.hpp"
#include "burn/grid.hpp"
#include "burn/partition.hpp"
#include "burn/reduction_interval.hpp"
#include "burn/reduction_permutation.hpp"
#include "burn/sampling.hpp"
#include "burn/text_io.hpp"

namespace burn::cli {

namespace {

using json = nlohmann::json;

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return in;
}

template <typename Writer>
void write_file(const std::string& path, Writer&& writer) {
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write " + path);
  writer(f);
}

Graph load_graph(const std::string& path) {
  auto in = open_in(path);
  return read_graph(in);
}

BurningSchedule load_schedule(const std::string& path) {
  auto in = open_in(path);
  return read_schedule(in);
}

ThreePartitionInstance load_instance(const std::string& path) {
  auto in = open_in(path);
  return validate_instance(read_integers(in));
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BURN_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("BURN_BUDGET is not a count: ") + env);
    }
  }
  return kDefaultNodeBudget;
}

const char* segment_name(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::q: return "Q";
    case SegmentKind::q_prime: return "Q'";
    case SegmentKind::t: return "T";
  }
  return "?";
}

json ig_artifact_json(const IGArtifact& art) {
  json segments = json::array();
  for (const auto& seg : art.segments) {
    segments.push_back({{"kind", segment_name(seg.kind)}, {"index", seg.index}, {"begin", seg.begin},
                        {"length", seg.length}});
  }
  return {{"kind", "ig"},
          {"instance", art.instance.elements()},
          {"vertices", art.graph.order()},
          {"edges", art.graph.size()},
          {"spine_length", art.spine_length},
          {"segments", segments}};
}

json pg_artifact_json(const PGArtifact& art) {
  json plan = json::array();
  for (const auto& seg : art.plan) plan.push_back({seg.first, seg.last});
  return {{"kind", "pg"},
          {"instance", art.instance.elements()},
          {"vertices", art.graph.order()},
          {"edges", art.graph.size()},
          {"plan", plan}};
}

// Re-reads an artifact file: the instance rebuilds the artifact, and every
// recorded field must match the rebuild.
json load_artifact(const std::string& path, const char* kind) {
  auto in = open_in(path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("artifact " + path + ": " + e.what());
  }
  if (!doc.is_object() || doc.value("kind", "") != kind) {
    throw InvalidInput("artifact " + path + " is not of kind '" + kind + "'");
  }
  return doc;
}

std::vector<std::int64_t> artifact_instance(const json& doc) {
  try {
    return doc.at("instance").get<std::vector<std::int64_t>>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("artifact instance: ") + e.what());
  }
}

void print_partition(std::ostream& out, const Partition3& p) {
  for (const auto& t : p.triples) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw InvalidInput("bad length '" + item + "'");
    }
  }
  return out;
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  return s.str();
}

int demo_interval(std::ostream& out) {
  auto inst = validate_instance(std::vector<std::int64_t>{10, 11, 12, 14, 15, 16});
  auto art = construct_ig(inst);
  out << "X = {10, 11, 12, 14, 15, 16}: n=" << inst.n() << " m=" << inst.max_element()
      << " B=" << inst.target() << " k=" << inst.slack() << '\n';
  out << "X' = " << join(art.sets.shifted) << "  B' = " << art.sets.shifted_target << '\n';
  out << "Y = " << join(art.sets.leftover) << '\n';
  std::vector<std::size_t> t_orders;
  for (std::size_t j = 1; j <= art.combs.size(); ++j) t_orders.push_back(art.t_segment(j).length);
  out << "T orders = " << join(t_orders) << '\n';
  out << "|P_I| = " << art.spine_length << "  |V(IG(X))| = " << art.graph.order() << '\n';

  auto solved = solve_3partition(inst);
  if (solved.status != SearchStatus::found) return kFailed;
  out << "partition:\n";
  print_partition(out, *solved.partition);
  auto schedule = partition_to_schedule(art, *solved.partition);
  auto outcome = simulate(art.graph, schedule);
  out << "witness rounds = " << schedule.length() << "  complete = " << (outcome.complete ? "yes" : "no") << '\n';
  out << "recovered:\n";
  print_partition(out, schedule_to_partition(art, schedule));
  return outcome.complete ? kSuccess : kFailed;
}

int demo_permutation(std::ostream& out) {
  auto inst = validate_instance(std::vector<std::int64_t>{10, 11, 12, 14, 15, 16});
  auto art = construct_px(inst);
  std::vector<std::size_t> orders;
  for (const auto& path : art.paths) orders.push_back(path.size());
  out << "P(X) components = " << join(orders) << '\n';
  out << "|V(P(X))| = " << art.graph.order() << "  components = " << art.paths.size() << '\n';
  auto solved = solve_3partition(inst);
  if (solved.status != SearchStatus::found) return kFailed;
  auto schedule = partition_to_schedule_pg(art, *solved.partition);
  auto outcome = simulate(art.graph, schedule);
  out << "witness rounds = " << schedule.length() << "  complete = " << (outcome.complete ? "yes" : "no") << '\n';
  out << "recovered:\n";
  print_partition(out, schedule_to_partition_pg(art, schedule));
  return outcome.complete ? kSuccess : kFailed;
}

struct CheckTally {
  std::size_t compared = 0;
  std::size_t rejected = 0;
  std::size_t disagreements = 0;
};

// One randomized comparison of the two completeness characterizations.
CheckTally check_trial(std::uint64_t seed, std::size_t trial, std::size_t max_n) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + trial);
  std::uniform_int_distribution<std::size_t> order(1, max_n);
  std::uniform_real_distribution<double> density(0.02, 0.5);
  Graph g = random_graph(order(rng), density(rng), rng);
  // Long random schedules almost always hit a burnt vertex; stay near 2 sqrt(n).
  std::size_t cap = 1;
  while (cap * cap < 4 * g.order()) ++cap;
  std::uniform_int_distribution<std::size_t> length(1, std::min(cap, g.order()));
  auto s = random_schedule(g, length(rng), rng);
  CheckTally t;
  bool covered = verify_schedule(g, s);
  try {
    bool complete = simulate(g, s).complete;
    ++t.compared;
    if (complete != covered) ++t.disagreements;
  } catch (const ScheduleRejected&) {
    ++t.rejected;
  }
  return t;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph burning toolkit"};
  app.require_subcommand(0, 1);
  std::function<int()> action;

  std::string demo;
  app.add_option("--demo", demo, "Reproduce a worked example end to end")
      ->check(CLI::IsMember({"s5.2", "s6.3"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->require_subcommand(1);
  std::string gen_out;
  auto emit_graph = [&](const Graph& g) {
    if (gen_out.empty()) {
      write_graph(out, g);
    } else {
      write_file(gen_out, [&](std::ostream& f) { write_graph(f, g); });
    }
    return kSuccess;
  };
  std::size_t gen_n = 0;
  auto* gen_path = gen->add_subcommand("path", "Path on N vertices");
  gen_path->add_option("--n", gen_n)->required();
  gen_path->add_option("--out", gen_out);
  gen_path->callback([&] { action = [&] { return emit_graph(build_path(gen_n)); }; });

  std::size_t rows = 0;
  std::size_t cols = 0;
  auto* gen_grid = gen->add_subcommand("grid", "rows x cols grid");
  gen_grid->add_option("--rows", rows)->required();
  gen_grid->add_option("--cols", cols)->required();
  gen_grid->add_option("--out", gen_out);
  gen_grid->callback([&] { action = [&] { return emit_graph(build_grid(rows, cols)); }; });

  std::string lengths_text;
  auto* gen_forest = gen->add_subcommand("forest", "Disjoint paths");
  gen_forest->add_option("--lengths", lengths_text, "Comma-separated component orders")->required();
  gen_forest->add_option("--out", gen_out);
  gen_forest->callback([&] {
    action = [&] {
      auto lengths = parse_lengths(lengths_text);
      return emit_graph(build_path_forest(lengths));
    };
  });

  std::string perm_file;
  auto* gen_pg = gen->add_subcommand("pg", "Permutation graph");
  gen_pg->add_option("--perm", perm_file)->required()->check(CLI::ExistingFile);
  gen_pg->add_option("--out", gen_out);
  gen_pg->callback([&] {
    action = [&] {
      auto in = open_in(perm_file);
      auto perm = read_permutation(in);
      return emit_graph(build_permutation_graph(perm.size(), perm));
    };
  });

  std::string intervals_file;
  auto* gen_ig = gen->add_subcommand("ig", "Interval graph from a representation");
  gen_ig->add_option("--intervals", intervals_file)->required()->check(CLI::ExistingFile);
  gen_ig->add_option("--out", gen_out);
  gen_ig->callback([&] {
    action = [&] {
      auto in = open_in(intervals_file);
      return emit_graph(build_interval_graph(read_intervals(in)));
    };
  });

  // verify
  std::string graph_file;
  std::string schedule_file;
  auto* verify = app.add_subcommand("verify", "Check that a schedule burns a graph");
  verify->add_option("--graph", graph_file)->required()->check(CLI::ExistingFile);
  verify->add_option("--schedule", schedule_file)->required()->check(CLI::ExistingFile);
  verify->callback([&] {
    action = [&] {
      auto g = load_graph(graph_file);
      auto s = load_schedule(schedule_file);
      BurnOutcome outcome;
      try {
        outcome = simulate(g, s);
      } catch (const ScheduleRejected& e) {
        out << "rejected: " << e.what() << '\n';
        return kFailed;
      }
      if (outcome.complete != verify_schedule(g, s)) throw Error("internal: burning characterizations disagree");
      const auto burnt = outcome.burned_by_round(outcome.rounds_used).size();
      out << (outcome.complete ? "complete" : "incomplete") << " rounds=" << outcome.rounds_used
          << " burnt=" << burnt << '/' << g.order() << '\n';
      return outcome.complete ? kSuccess : kFailed;
    };
  });

  // exact
  std::uint64_t budget = 0;
  auto* exact = app.add_subcommand("exact", "Exact burning number with a witness");
  exact->add_option("--graph", graph_file)->required()->check(CLI::ExistingFile);
  auto* exact_budget = exact->add_option("--budget", budget, "Search node budget");
  exact->callback([&] {
    action = [&] {
      auto g = load_graph(graph_file);
      auto res = exact_burning_number(g, exact_budget->count() ? budget : default_budget());
      out << "k=" << res.k << '\n';
      write_schedule(out, res.witness);
      return kSuccess;
    };
  });

  // greedy
  auto* greedy = app.add_subcommand("greedy", "Farthest-first heuristic schedule");
  greedy->add_option("--graph", graph_file)->required()->check(CLI::ExistingFile);
  greedy->callback([&] {
    action = [&] {
      auto s = greedy_burn(load_graph(graph_file));
      out << "k=" << s.length() << '\n';
      write_schedule(out, s);
      return kSuccess;
    };
  });

  // grid
  std::string report = "text";
  std::vector<std::size_t> subgrid;
  auto* grid = app.add_subcommand("grid", "Subgrid 2-approximation burner");
  grid->add_option("--rows", rows)->required()->check(CLI::PositiveNumber);
  grid->add_option("--cols", cols)->required()->check(CLI::PositiveNumber);
  grid->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
  grid->add_option("--subgrid", subgrid, "Force subgrid rows and cols")->expected(2);
  grid->callback([&] {
    action = [&] {
      GridBurnOptions options;
      if (!subgrid.empty()) options.subgrid = GridSpec{subgrid[0], subgrid[1]};
      auto r = burn_grid_2approx({rows, cols}, options);
      if (report == "json") {
        json doc = {{"schedule", r.schedule.sources},
                    {"rounds", r.rounds_used},
                    {"lower_bound", r.lower_bound},
                    {"upper_bound", r.upper_bound_formula},
                    {"ratio", r.ratio}};
        out << doc.dump() << '\n';
      } else {
        out << "rounds=" << r.rounds_used << " lower_bound=" << r.lower_bound
            << " upper_bound=" << r.upper_bound_formula << " ratio=" << std::fixed
            << std::setprecision(4) << r.ratio << '\n';
        write_schedule(out, r.schedule);
      }
      return kSuccess;
    };
  });

  // 3part
  std::string instance_file;
  auto* part = app.add_subcommand("3part", "Solve a distinct 3-partition instance");
  part->add_option("--in", instance_file)->required()->check(CLI::ExistingFile);
  auto* part_budget = part->add_option("--budget", budget);
  part->callback([&] {
    action = [&] {
      auto inst = load_instance(instance_file);
      auto res = solve_3partition(inst, part_budget->count() ? budget : default_budget());
      if (res.status == SearchStatus::budget_exhausted) throw BudgetExhausted("3-partition search exceeded budget");
      if (res.status == SearchStatus::infeasible) {
        out << "UNSAT\n";
      } else {
        print_partition(out, *res.partition);
      }
      return kSuccess;
    };
  });

  // reduce-ig / reduce-pg
  std::string emit_graph_file;
  std::string emit_aux_file;
  std::string emit_artifact_file;
  std::string witness_file;
  auto solve_for_witness = [&](const ThreePartitionInstance& inst) -> std::optional<Partition3> {
    auto res = solve_3partition(inst, default_budget());
    if (res.status == SearchStatus::budget_exhausted) throw BudgetExhausted("3-partition search exceeded budget");
    return res.partition;
  };

  auto* reduce_ig = app.add_subcommand("reduce-ig", "Build IG(X) from an instance");
  reduce_ig->add_option("--in", instance_file)->required()->check(CLI::ExistingFile);
  reduce_ig->add_option("--emit-graph", emit_graph_file);
  reduce_ig->add_option("--emit-intervals", emit_aux_file);
  reduce_ig->add_option("--emit-artifact", emit_artifact_file);
  reduce_ig->add_option("--witness", witness_file);
  reduce_ig->callback([&] {
    action = [&] {
      auto art = construct_ig(load_instance(instance_file));
      if (!emit_graph_file.empty()) write_file(emit_graph_file, [&](std::ostream& f) { write_graph(f, art.graph); });
      if (!emit_aux_file.empty()) {
        write_file(emit_aux_file, [&](std::ostream& f) { write_intervals(f, emit_interval_representation(art)); });
      }
      if (!emit_artifact_file.empty()) {
        write_file(emit_artifact_file, [&](std::ostream& f) { f << ig_artifact_json(art).dump(2) << '\n'; });
      }
      out << "vertices=" << art.graph.order() << " edges=" << art.graph.size()
          << " spine=" << art.spine_length << " target_rounds=" << 2 * art.m() + 1 << '\n';
      if (witness_file.empty()) return kSuccess;
      auto p = solve_for_witness(art.instance);
      if (!p) {
        out << "UNSAT\n";
        return kFailed;
      }
      auto s = partition_to_schedule(art, *p);
      write_file(witness_file, [&](std::ostream& f) { write_schedule(f, s); });
      out << "witness rounds=" << s.length() << '\n';
      return kSuccess;
    };
  });

  std::string artifact_file;
  auto* extract_ig = app.add_subcommand("extract-ig", "Recover a 3-partition from an IG(X) schedule");
  extract_ig->add_option("--artifact", artifact_file)->required()->check(CLI::ExistingFile);
  extract_ig->add_option("--schedule", schedule_file)->required()->check(CLI::ExistingFile);
  extract_ig->callback([&] {
    action = [&] {
      auto doc = load_artifact(artifact_file, "ig");
      auto art = construct_ig(validate_instance(artifact_instance(doc)));
      if (ig_artifact_json(art) != doc) throw InvalidInput("artifact metadata does not match its instance");
      print_partition(out, schedule_to_partition(art, load_schedule(schedule_file)));
      return kSuccess;
    };
  });

  auto* reduce_pg = app.add_subcommand("reduce-pg", "Build P(X) from an instance");
  reduce_pg->add_option("--in", instance_file)->required()->check(CLI::ExistingFile);
  reduce_pg->add_option("--emit-graph", emit_graph_file);
  reduce_pg->add_option("--emit-perm", emit_aux_file);
  reduce_pg->add_option("--emit-artifact", emit_artifact_file);
  reduce_pg->add_option("--witness", witness_file);
  reduce_pg->callback([&] {
    action = [&] {
      auto art = construct_px(load_instance(instance_file));
      if (!emit_graph_file.empty()) write_file(emit_graph_file, [&](std::ostream& f) { write_graph(f, art.graph); });
      if (!emit_aux_file.empty()) write_file(emit_aux_file, [&](std::ostream& f) { write_permutation(f, art.perm); });
      if (!emit_artifact_file.empty()) {
        write_file(emit_artifact_file, [&](std::ostream& f) { f << pg_artifact_json(art).dump(2) << '\n'; });
      }
      out << "vertices=" << art.graph.order() << " components=" << art.paths.size()
          << " target_rounds=" << art.m() << '\n';
      if (witness_file.empty()) return kSuccess;
      auto p = solve_for_witness(art.instance);
      if (!p) {
        out << "UNSAT\n";
        return kFailed;
      }
      auto s = partition_to_schedule_pg(art, *p);
      write_file(witness_file, [&](std::ostream& f) { write_schedule(f, s); });
      out << "witness rounds=" << s.length() << '\n';
      return kSuccess;
    };
  });

  auto* extract_pg = app.add_subcommand("extract-pg", "Recover a 3-partition from a P(X) schedule");
  extract_pg->add_option("--artifact", artifact_file)->required()->check(CLI::ExistingFile);
  extract_pg->add_option("--schedule", schedule_file)->required()->check(CLI::ExistingFile);
  extract_pg->callback([&] {
    action = [&] {
      auto doc = load_artifact(artifact_file, "pg");
      auto art = construct_px(validate_instance(artifact_instance(doc)));
      if (pg_artifact_json(art) != doc) throw InvalidInput("artifact metadata does not match its instance");
      print_partition(out, schedule_to_partition_pg(art, load_schedule(schedule_file)));
      return kSuccess;
    };
  });

  // check
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t max_n = 50;
  auto* check = app.add_subcommand("check", "Randomized cross-check of the two burning characterizations");
  check->add_option("--trials", trials);
  check->add_option("--seed", seed);
  check->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  check->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  check->callback([&] {
    action = [&] {
      std::vector<CheckTally> tallies(trials);
      std::vector<std::thread> workers;
      for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          for (std::size_t t = w; t < trials; t += jobs) tallies[t] = check_trial(seed, t, max_n);
        });
      }
      for (auto& worker : workers) worker.join();
      CheckTally total;
      for (const auto& t : tallies) {
        total.compared += t.compared;
        total.rejected += t.rejected;
        total.disagreements += t.disagreements;
      }
      out << "trials=" << trials << " compared=" << total.compared << " rejected=" << total.rejected
          << " disagreements=" << total.disagreements << '\n';
      return total.disagreements == 0 ? kSuccess : kFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kMalformedInput;
  }

  try {
    if (!demo.empty()) return demo == "s5.2" ? demo_interval(out) : demo_permutation(out);
    if (!action) {
      out << app.help();
      return kMalformedInput;
    }
    return action();
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const InvalidInput& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const ExtractionError& e) {
    err << "extraction failed: " << e.what() << '\n';
    return kFailed;
  } catch (const ScheduleRejected& e) {
    err << "rejected schedule: " << e.what() << '\n';
    return kFailed;
  }
}

}  // namespace burn::cli
