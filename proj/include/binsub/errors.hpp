#pragma once

#include <stdexcept>
#include <string>

namespace binsub {

enum class ErrorCode {
  DuplicateEntry,   // two equal values in one sigma list
  NonPositiveEntry, // sigma values must be >= 1
  LengthMismatch,   // sigma lists of unequal length
  BadShape,         // m < 2, r < 1, or m beyond the word width
  Overlap,          // row_merge rows share a 1 in some column
  IndexOutOfRange,
  CapExceeded,      // enumeration cap (minor oracle, weight search)
  ZeroColumn,       // code matrix has an all-zero column
  DuplicateColumn,  // code matrix has two equal columns
  Infeasible,       // search exhausted the row-count cap
  BadArgument,
};

const char* error_code_name(ErrorCode code);

// Validation and precondition failures. `args` carries up to three indices
// (letter, position, position) so callers can inspect the failure site;
// unused slots are -1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg, long long a0 = -1,
        long long a1 = -1, long long a2 = -1)
      : std::runtime_error(msg), code_(code), args_{a0, a1, a2} {}

  ErrorCode code() const noexcept { return code_; }
  long long arg(int i) const noexcept { return args_[i]; }

 private:
  ErrorCode code_;
  long long args_[3];
};

// A broken internal invariant: never expected to fire on any input.
// The CLI maps this to its own exit code so breaches are visible.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace binsub
