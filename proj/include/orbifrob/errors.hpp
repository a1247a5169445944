#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbifrob {

/// Malformed text or document input (CLI exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that parses but violates a structural precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that was required to be invertible is not.
class SingularMatrix : public std::runtime_error {
 public:
  SingularMatrix(std::size_t rank, std::size_t size)
      : std::runtime_error("singular matrix: rank " + std::to_string(rank) + " < " +
                           std::to_string(size)),
        rank_(rank) {}
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// A construction or verification would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimate, double limit)
      : std::runtime_error(what + ": estimated cost " + std::to_string(static_cast<long long>(estimate)) +
                           " exceeds budget " + std::to_string(static_cast<long long>(limit))),
        estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

}  // namespace orbifrob
