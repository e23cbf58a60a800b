#pragma once

#include <stdexcept>
#include <string>

namespace cycdesc {

// Input outside an operation's domain (bad set, k out of range, d not dividing n...).
// std::domain_error is used directly for those; the two below cover the rest.

/// Requested size exceeds a hard enumeration or scan cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem-backed invariant failed (inexact division, negative count).
/// Signals an implementation bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cycdesc
