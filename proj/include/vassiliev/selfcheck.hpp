#pragma once

#include <iosfwd>

namespace vb {

struct SelfcheckOptions {
  int n = 2;
  int g = 1;
  int N = 2;
  long long fuel = 1'000'000;
  unsigned seed = 12345;
  // Test hook: damages one relation before checking, to exercise the
  // failure path of the report.
  bool corrupt_rule = false;
};

// Runs the internal consistency suites at the given size, printing one
// summary line per suite. Returns false if anything failed.
bool run_selfcheck(const SelfcheckOptions& opt, std::ostream& out);

}  // namespace vb
