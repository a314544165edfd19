#include "burn/text_io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "burn/errors.hpp"

namespace burn {

namespace {

// Reads every whitespace-separated integer until end of input.
std::vector<std::int64_t> all_integers(std::istream& in, const char* what) {
  std::vector<std::int64_t> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw InvalidInput(std::string("malformed ") + what + ": '" + token + "'");
    out.push_back(value);
  }
  return out;
}

std::uint32_t as_id(std::int64_t v, const char* what) {
  if (v < 0 || v >= static_cast<std::int64_t>(std::numeric_limits<std::uint32_t>::max())) {
    throw InvalidInput(std::string(what) + " out of range: " + std::to_string(v));
  }
  return static_cast<std::uint32_t>(v);
}

template <typename T>
void write_line(std::ostream& out, const std::vector<T>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ' ';
    out << values[i];
  }
  out << '\n';
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& in) {
  auto values = all_integers(in, "graph");
  if (values.size() < 2) throw InvalidInput("graph: missing 'n m' header");
  const auto n = as_id(values[0], "vertex count");
  const auto m = static_cast<std::size_t>(as_id(values[1], "edge count"));
  if (values.size() != 2 + 2 * m) throw InvalidInput("graph: expected " + std::to_string(m) + " edges");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    auto u = as_id(values[2 + 2 * i], "vertex");
    auto v = as_id(values[3 + 2 * i], "vertex");
    if (!(u < v)) throw InvalidInput("graph: edge lines must satisfy u < v");
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

void write_intervals(std::ostream& out, const IntervalRepresentation& rep) {
  for (std::size_t v = 0; v < rep.size(); ++v) out << v << ' ' << rep[v].left << ' ' << rep[v].right << '\n';
}

IntervalRepresentation read_intervals(std::istream& in) {
  auto values = all_integers(in, "interval file");
  if (values.size() % 3 != 0) throw InvalidInput("interval file: lines must be 'id left right'");
  const std::size_t n = values.size() / 3;
  IntervalRepresentation rep(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto id = as_id(values[3 * i], "interval id");
    if (id >= n || seen[id]) throw InvalidInput("interval file: ids must be 0..n-1, each once");
    seen[id] = true;
    rep[id] = {values[3 * i + 1], values[3 * i + 2]};
    if (rep[id].left > rep[id].right) throw InvalidInput("interval file: left > right for id " + std::to_string(id));
  }
  return rep;
}

void write_schedule(std::ostream& out, const BurningSchedule& s) { write_line(out, s.sources); }

BurningSchedule read_schedule(std::istream& in) {
  BurningSchedule s;
  for (auto v : all_integers(in, "schedule")) s.sources.push_back(as_id(v, "fire source"));
  return s;
}

void write_integers(std::ostream& out, const std::vector<std::int64_t>& values) { write_line(out, values); }

std::vector<std::int64_t> read_integers(std::istream& in) { return all_integers(in, "integer list"); }

void write_permutation(std::ostream& out, const Permutation& p) { write_line(out, p); }

Permutation read_permutation(std::istream& in) {
  Permutation p;
  for (auto v : all_integers(in, "permutation")) p.push_back(as_id(v, "permutation value"));
  return p;
}

}  // namespace burn
