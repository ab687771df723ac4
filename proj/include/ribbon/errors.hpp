#pragma once

#include <stdexcept>
#include <string>

namespace ribbon {

// Bad user-facing input: partitions outside the rectangle, r out of range.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mixing objects that live in different universes or settings.
struct structural_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A documented precondition was violated (degenerate specialization,
// non-symmetric input, insufficient truncation).
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An internal identity failed; always an implementation bug.
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ribbon
