#pragma once

#include <stdexcept>
#include <string>

namespace qvs {

// Error taxonomy mirrored by the CLI exit codes.  Every truncated
// computation must fail loudly when the truncation cannot certify an
// answer; "unknown" is never silently coerced to zero/false.

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& m) : std::runtime_error(m) {}
};

struct DepthInconclusiveError : std::runtime_error {
  explicit DepthInconclusiveError(const std::string& m)
      : std::runtime_error(m) {}
};

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& m) : std::runtime_error(m) {}
};

struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace qvs
