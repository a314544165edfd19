#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "burn/burning.hpp"
#include "burn/graph.hpp"

namespace burn {

struct GridSpec {
  std::size_t rows = 0;
  std::size_t cols = 0;
};

struct GridBurnReport {
  BurningSchedule schedule;
  std::size_t rounds_used = 0;
  std::size_t lower_bound = 0;
  /// ceil(2 s^{2/3} + 2 s^{1/3} + 1) for s = max(rows, cols).
  std::size_t upper_bound_formula = 0;
  double ratio = 0.0;
};

struct GridBurnOptions {
  /// Overrides the ceil(l^{2/3}) x ceil(b^{2/3}) subgrid shape.
  std::optional<GridSpec> subgrid;
};

/// Largest floor(x^{1/k}).
std::uint64_t integer_root(std::uint64_t x, unsigned k);
/// Smallest r with r^k >= x.
std::uint64_t ceil_root(std::uint64_t x, unsigned k);

/// Most vertices one source burns in k rounds on an unbounded grid, 2k(k-1)+1.
std::uint64_t max_burnable(std::size_t k);

/// Smallest i with (2i^3 + i) / 3 >= rows * cols.
std::size_t grid_lower_bound(const GridSpec& spec);

/// ceil(2 l^{2/3} + 2 l^{1/3} + 1), decided with integer arithmetic only.
std::size_t upper_bound_formula(std::size_t side);

/// Radical center of a rows x cols grid (row-major ids), smallest id on ties.
Vertex grid_radical_center(const GridSpec& spec);

/// Subgrid sources in row-major order, then farthest-first completion.
GridBurnReport burn_grid_2approx(const GridSpec& spec, const GridBurnOptions& options = {});

}  // namespace burn
