#include "polysat/error.hpp"

namespace polysat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotRanked: return "NotRanked";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::InvalidDelta: return "InvalidDelta";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::InvalidRealizer: return "InvalidRealizer";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Deadline::Deadline(double seconds)
    : unlimited_(!(seconds > 0.0) || seconds > 1e9) {
  if (!unlimited_) {
    end_ = std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(seconds));
  }
}

void Deadline::poll() {
  if (unlimited_ || (++counter_ & 0xfffu) != 0) return;
  if (std::chrono::steady_clock::now() > end_) {
    throw Error(ErrorCode::BudgetExceeded, "search time budget exhausted");
  }
}

void require_size(int n, const SearchLimits& limits, std::string_view what) {
  if (n > limits.max_n || n > 64) {
    throw Error(ErrorCode::SizeLimitExceeded,
                std::string(what) + ": " + std::to_string(n) +
                    " elements exceeds the limit of " +
                    std::to_string(std::min(limits.max_n, 64)));
  }
}

}  // namespace polysat
