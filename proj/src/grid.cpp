#include "burn/grid.hpp"

#include <algorithm>
#include <string>

#include "burn/errors.hpp"

namespace burn {

namespace {

using wide = unsigned __int128;

wide power(wide base, unsigned k) {
  wide out = 1;
  for (unsigned i = 0; i < k; ++i) out *= base;
  return out;
}

void check_spec(const GridSpec& spec) {
  if (spec.rows == 0 || spec.cols == 0) throw InvalidInput("grid dimensions must be positive");
}

}  // namespace

std::uint64_t integer_root(std::uint64_t x, unsigned k) {
  if (k == 0) throw InvalidInput("root degree must be positive");
  if (x < 2 || k == 1) return x;
  std::uint64_t lo = 1;
  std::uint64_t hi = std::min<std::uint64_t>(x, std::uint64_t{1} << (64 / k + 1));
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (power(mid, k) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::uint64_t ceil_root(std::uint64_t x, unsigned k) {
  auto r = integer_root(x, k);
  return power(r, k) == x ? r : r + 1;
}

std::uint64_t max_burnable(std::size_t k) {
  if (k == 0) throw InvalidInput("round count must be at least 1");
  // f_1 = 1, f_k = 4(k-1) + f_{k-1}
  std::uint64_t by_recurrence = 1;
  for (std::size_t j = 2; j <= k; ++j) by_recurrence += 4 * (j - 1);
  const std::uint64_t closed = 2 * static_cast<std::uint64_t>(k) * (k - 1) + 1;
  if (by_recurrence != closed) throw Error("internal: ball-growth recurrence mismatch");
  return closed;
}

std::size_t grid_lower_bound(const GridSpec& spec) {
  check_spec(spec);
  const wide target = static_cast<wide>(spec.rows) * spec.cols * 3;
  std::size_t lo = 1;
  std::size_t hi = 1;
  while (2 * power(hi, 3) + hi < target) hi *= 2;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (2 * power(mid, 3) + mid >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo < ceil_root(static_cast<std::uint64_t>(spec.rows) * spec.cols, 3)) {
    throw Error("internal: grid lower bound below cube root");
  }
  return lo;
}

std::size_t upper_bound_formula(std::size_t side) {
  if (side == 0) throw InvalidInput("grid side must be positive");
  // With c = side^{1/3}, s = c^2 + c is the unique root >= sqrt(side) of
  // s^3 - 3 side s - side (side + 1). So N >= 2s + 1 holds exactly when
  // M = (N-1)/2 satisfies M^2 >= side and M^3 - 3 side M - side (side + 1) >= 0,
  // scaled by 8 below to stay in integers.
  const auto l = static_cast<__int128>(side);
  auto covers = [&](std::size_t n) {
    const auto t = static_cast<__int128>(n) - 1;
    if (t < 0 || t * t < 4 * l) return false;
    return t * t * t - 12 * l * t - 8 * l * (l + 1) >= 0;
  };
  std::size_t lo = 1;
  std::size_t hi = 4 * side + 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (covers(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

Vertex grid_radical_center(const GridSpec& spec) {
  check_spec(spec);
  // Eccentricity of (r, c) is max(r, rows-1-r) + max(c, cols-1-c).
  const std::size_t r = (spec.rows - 1) / 2;
  const std::size_t c = (spec.cols - 1) / 2;
  return static_cast<Vertex>(r * spec.cols + c);
}

GridBurnReport burn_grid_2approx(const GridSpec& spec, const GridBurnOptions& options) {
  check_spec(spec);
  GridSpec block{ceil_root(static_cast<std::uint64_t>(spec.rows) * spec.rows, 3),
                 ceil_root(static_cast<std::uint64_t>(spec.cols) * spec.cols, 3)};
  if (options.subgrid) {
    block = *options.subgrid;
    check_spec(block);
  }

  const Graph g = build_grid(spec.rows, spec.cols);
  BurnProcess process(g);
  GridBurnReport report;
  auto& sources = report.schedule.sources;

  for (std::size_t top = 0; top < spec.rows; top += block.rows) {
    for (std::size_t left = 0; left < spec.cols; left += block.cols) {
      if (process.complete()) break;
      GridSpec piece{std::min(block.rows, spec.rows - top), std::min(block.cols, spec.cols - left)};
      Vertex local = grid_radical_center(piece);
      std::size_t r = top + local / piece.cols;
      std::size_t c = left + local % piece.cols;
      auto center = static_cast<Vertex>(r * spec.cols + c);
      // A center reached by earlier fire adds nothing; its subgrid is skipped.
      if (process.burnt(center)) continue;
      process.place(center);
      sources.push_back(center);
    }
  }
  while (!process.complete()) {
    Vertex next = farthest_unburnt(g, process);
    process.place(next);
    sources.push_back(next);
  }

  if (!verify_schedule(g, report.schedule)) {
    throw Error("internal: grid schedule failed coverage verification");
  }
  report.rounds_used = sources.size();
  report.lower_bound = grid_lower_bound(spec);
  report.upper_bound_formula = upper_bound_formula(std::max(spec.rows, spec.cols));
  report.ratio = static_cast<double>(report.rounds_used) / static_cast<double>(report.lower_bound);
  return report;
}

}  // namespace burn
