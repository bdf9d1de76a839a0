#pragma once

#include <stdexcept>
#include <string>

namespace sectorlab {

// Lattice reduction needed more s-adic digits than the hard cap allows.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configurable resource cap (vertex count, group order, search size) was hit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed object violated a structural guarantee the library relies on
// (closure escaping a degree pattern, non-nilpotent unipotent part, ...).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sectorlab
