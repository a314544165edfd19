#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "burn/errors.hpp"
#include "burn/exact.hpp"

namespace burn {

enum class InstanceViolation {
  empty,
  size_not_multiple_of_three,
  non_positive_element,
  repeated_element,
  sum_not_divisible,
  outside_window,
  max_too_small,
};

const char* to_string(InstanceViolation v);

/// A distinct 3-partition instance failed validation.
class InvalidInstance : public InvalidInput {
 public:
  InvalidInstance(InstanceViolation violation, const std::string& detail)
      : InvalidInput(std::string(to_string(violation)) + ": " + detail), violation_(violation) {}
  InstanceViolation violation() const { return violation_; }

 private:
  InstanceViolation violation_;
};

/// Validated distinct 3-partition input. Only validate_instance builds one.
class ThreePartitionInstance {
 public:
  /// Elements in input order.
  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::int64_t n() const { return n_; }
  /// Target sum of every triple.
  std::int64_t target() const { return target_; }
  /// Largest element.
  std::int64_t max_element() const { return max_; }
  /// max_element - 3n, the number of odd values 1..2m-1 missing from the shifted set.
  std::int64_t slack() const { return max_ - 3 * n_; }

 private:
  friend ThreePartitionInstance validate_instance(std::span<const std::int64_t> values);
  std::vector<std::int64_t> elements_;
  std::int64_t n_ = 0;
  std::int64_t target_ = 0;
  std::int64_t max_ = 0;
};

using Triple = std::array<std::int64_t, 3>;

struct Partition3 {
  std::vector<Triple> triples;
  bool operator==(const Partition3&) const = default;
};

/// Throws InvalidInstance naming the first violated condition.
ThreePartitionInstance validate_instance(std::span<const std::int64_t> values);

struct PartitionSearchResult {
  SearchStatus status = SearchStatus::infeasible;
  std::optional<Partition3> partition;
  std::uint64_t nodes_explored = 0;
};

/// Backtracking over triples, largest remaining element first. Triples come
/// out sorted descending inside and by their largest element across.
PartitionSearchResult solve_3partition(const ThreePartitionInstance& inst,
                                       std::uint64_t node_budget = kDefaultNodeBudget);

bool verify_partition(const ThreePartitionInstance& inst, const Partition3& p);

}  // namespace burn
