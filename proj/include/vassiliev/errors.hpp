#pragma once

#include <stdexcept>
#include <string>

namespace vb {

// Raised for malformed textual input (CLI exit code 2).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a computation cannot proceed (CLI exit code 3): bad
// preconditions, exhausted budgets, internal contract violations.
struct pipeline_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct fuel_exhausted : pipeline_error {
  using pipeline_error::pipeline_error;
};

// Budget for search-type procedures (fillings, normal-form closure).
struct Fuel {
  long long left = 1'000'000;

  void spend(long long cost = 1) {
    left -= cost;
    if (left < 0) throw fuel_exhausted("fuel exhausted");
  }
};

}  // namespace vb
