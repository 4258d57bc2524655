#pragma once

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polysat {

enum class ErrorCode {
  CycleDetected,
  IndexOutOfRange,
  EmptyPoset,
  SizeLimitExceeded,
  BudgetExceeded,
  NotRanked,
  PartitionMismatch,
  BadK,
  InvalidDelta,
  BadParameters,
  Infeasible,
  InvalidRealizer,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Size and wall-clock guard for the exhaustive searches. Searches refuse
// inputs larger than max_n and abort with BudgetExceeded once the budget is
// spent; they never fall back to sampling.
struct SearchLimits {
  int max_n = 16;
  double budget_seconds = 600.0;
};

class Deadline {
 public:
  explicit Deadline(double seconds);

  // Throws BudgetExceeded once the deadline has passed. Only consults the
  // clock every few thousand calls.
  void poll();

 private:
  std::chrono::steady_clock::time_point end_;
  bool unlimited_;
  unsigned counter_ = 0;
};

void require_size(int n, const SearchLimits& limits, std::string_view what);

}  // namespace polysat
