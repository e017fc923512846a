#pragma once

// Built-in verifier battery behind the `selftest` command: field
// axioms, Vandermonde submatrix invertibility, golden share vectors,
// encode/decode roundtrips across all scheme kinds, the secrecy rank
// criterion, kernel equivalence, and wire roundtrips.

#include <cstdint>
#include <ostream>

namespace staircase {

struct selftest_options {
  std::uint32_t max_n = 6;   // upper party count for exhaustive sweeps
  bool inject_fault = false;  // mutate a layout and demand detection
};

// Prints one line per check; returns the number of failures.
int run_selftest(const selftest_options& opt, std::ostream& out);

}  // namespace staircase
