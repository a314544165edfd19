#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "burn/burning.hpp"
#include "burn/graph.hpp"

namespace burn {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Largest graph the exact search accepts (it keeps all-pairs distances).
inline constexpr std::size_t kExactMaxOrder = 4096;

enum class SearchStatus {
  found,
  /// The search space was exhausted; no solution exists.
  infeasible,
  /// The node budget ran out first; nothing is proven.
  budget_exhausted,
};

struct BurnSearchResult {
  SearchStatus status = SearchStatus::infeasible;
  std::optional<BurningSchedule> witness;
  std::uint64_t nodes_explored = 0;
};

/// Decides whether g burns within k rounds. A witness may be shorter than k
/// when the graph is already complete earlier.
BurnSearchResult can_burn_in(const Graph& g, std::size_t k,
                             std::uint64_t node_budget = kDefaultNodeBudget);

struct ExactResult {
  std::size_t k = 0;
  BurningSchedule witness;
  std::uint64_t nodes_explored = 0;
};

/// Burning number with a complete witness of that length. Throws
/// BudgetExhausted when the budget runs out before a proof.
ExactResult exact_burning_number(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

/// Lower bound from two counting arguments: a ball of radius r meets an
/// isometric path in at most 2r+1 vertices (applied to one diametral path per
/// component), and k rounds burn at most the sum of the k largest balls.
std::size_t burning_lower_bound(const Graph& g);

}  // namespace burn
