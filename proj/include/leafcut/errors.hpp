#pragma once

#include <stdexcept>

namespace leafcut {

/// A configurable resource guard (minor count, recursion depth, reduction
/// steps) was exceeded. Maps to CLI exit code 3.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug rather than bad input.
/// Maps to CLI exit code 4.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Input rejected by schema or semantic validation. Maps to CLI exit code 2.
struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace leafcut
