#pragma once

#include <stdexcept>
#include <string>

namespace lss {

// Raised when input data breaks a contract: unreadable or truncated files,
// dimension mismatches, degenerate values. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a user-supplied option cannot be interpreted (unknown metric
// name, malformed flag value). The CLI maps this to exit code 1.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lss
