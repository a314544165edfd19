#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "burn/burning.hpp"
#include "burn/graph.hpp"
#include "burn/reduction_permutation.hpp"

namespace burn {

// Line-oriented formats. Readers throw InvalidInput on malformed text.
//
//   graph:      "n m", then m lines "u v" with 0 <= u < v < n
//   intervals:  one line "id left right" per vertex
//   schedule:   one line of vertex ids in round order
//   instance:   one line of integers
//   permutation: one line of values

void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

void write_intervals(std::ostream& out, const IntervalRepresentation& rep);
IntervalRepresentation read_intervals(std::istream& in);

void write_schedule(std::ostream& out, const BurningSchedule& s);
BurningSchedule read_schedule(std::istream& in);

void write_integers(std::ostream& out, const std::vector<std::int64_t>& values);
std::vector<std::int64_t> read_integers(std::istream& in);

void write_permutation(std::ostream& out, const Permutation& p);
Permutation read_permutation(std::istream& in);

}  // namespace burn
