#include "burn/partition.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace burn {

const char* to_string(InstanceViolation v) {
  switch (v) {
    case InstanceViolation::empty: return "empty instance";
    case InstanceViolation::size_not_multiple_of_three: return "size not a multiple of 3";
    case InstanceViolation::non_positive_element: return "non-positive element";
    case InstanceViolation::repeated_element: return "elements not distinct";
    case InstanceViolation::sum_not_divisible: return "sum not divisible by n";
    case InstanceViolation::outside_window: return "element outside (B/4, B/2)";
    case InstanceViolation::max_too_small: return "max element below 3n";
  }
  return "unknown violation";
}

ThreePartitionInstance validate_instance(std::span<const std::int64_t> values) {
  using V = InstanceViolation;
  if (values.empty()) throw InvalidInstance(V::empty, "no elements");
  if (values.size() % 3 != 0) {
    throw InvalidInstance(V::size_not_multiple_of_three, std::to_string(values.size()) + " elements");
  }
  std::set<std::int64_t> seen;
  std::int64_t sum = 0;
  for (auto a : values) {
    if (a <= 0) throw InvalidInstance(V::non_positive_element, std::to_string(a));
    if (!seen.insert(a).second) throw InvalidInstance(V::repeated_element, std::to_string(a));
    sum += a;
  }
  const auto n = static_cast<std::int64_t>(values.size() / 3);
  if (sum % n != 0) {
    throw InvalidInstance(V::sum_not_divisible, "sum " + std::to_string(sum) + ", n " + std::to_string(n));
  }
  const std::int64_t target = sum / n;
  for (auto a : values) {
    if (!(4 * a > target && 2 * a < target)) {
      throw InvalidInstance(V::outside_window, std::to_string(a) + " with B = " + std::to_string(target));
    }
  }
  const std::int64_t m = *std::max_element(values.begin(), values.end());
  if (m < 3 * n) throw InvalidInstance(V::max_too_small, "m = " + std::to_string(m));

  ThreePartitionInstance inst;
  inst.elements_.assign(values.begin(), values.end());
  inst.n_ = n;
  inst.target_ = target;
  inst.max_ = m;
  return inst;
}

PartitionSearchResult solve_3partition(const ThreePartitionInstance& inst, std::uint64_t node_budget) {
  std::vector<std::int64_t> pool = inst.elements();
  std::sort(pool.begin(), pool.end(), std::greater<>());
  const std::int64_t target = inst.target();
  std::vector<bool> used(pool.size(), false);
  std::vector<Triple> chosen;
  PartitionSearchResult out;
  bool exhausted = false;

  // Elements are distinct, so each triple is found exactly once: the largest
  // unused element, then a strictly smaller pair.
  std::function<bool()> descend = [&]() -> bool {
    auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) return true;
    if (++out.nodes_explored > node_budget) {
      exhausted = true;
      return false;
    }
    const auto i = static_cast<std::size_t>(first - used.begin());
    used[i] = true;
    for (std::size_t j = i + 1; j < pool.size() && !exhausted; ++j) {
      if (used[j]) continue;
      const std::int64_t rest = target - pool[i] - pool[j];
      if (rest >= pool[j]) continue;
      for (std::size_t t = j + 1; t < pool.size(); ++t) {
        if (used[t] || pool[t] != rest) continue;
        used[j] = used[t] = true;
        chosen.push_back({pool[i], pool[j], pool[t]});
        if (descend()) return true;
        chosen.pop_back();
        used[j] = used[t] = false;
        break;
      }
    }
    used[i] = false;
    return false;
  };

  if (descend()) {
    out.status = SearchStatus::found;
    out.partition = Partition3{chosen};
  } else {
    out.status = exhausted ? SearchStatus::budget_exhausted : SearchStatus::infeasible;
  }
  return out;
}

bool verify_partition(const ThreePartitionInstance& inst, const Partition3& p) {
  if (static_cast<std::int64_t>(p.triples.size()) != inst.n()) return false;
  std::vector<std::int64_t> used;
  for (const auto& t : p.triples) {
    if (t[0] + t[1] + t[2] != inst.target()) return false;
    used.insert(used.end(), t.begin(), t.end());
  }
  std::vector<std::int64_t> expected = inst.elements();
  std::sort(used.begin(), used.end());
  std::sort(expected.begin(), expected.end());
  return used == expected;
}

}  // namespace burn
