#pragma once

#include <stdexcept>
#include <string>

namespace burn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input: bad sizes, bad ids, parse failures.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A burning schedule that cannot be executed as written, e.g. a fire
/// source that is already burnt at the round it is placed.
class ScheduleRejected : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of node budget before reaching a verdict.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// A burning schedule could not be mapped back to a 3-partition.
class ExtractionError : public Error {
 public:
  enum class Kind {
    /// Wrong length, or the schedule does not burn the graph.
    precondition,
    /// Complete, but clusters do not tile the host the way an optimal
    /// schedule must.
    not_optimal_shaped,
  };

  ExtractionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace burn
