#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace staircase {

// Base class of all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument: bad field spec, violated scheme inequality, bad flag.
struct param_error : error {
  using error::error;
};

// Multiplicative inverse of zero requested.
struct div_zero_error : error {
  using error::error;
};

// A square system had no unique solution; carries the rank reached.
struct singular_error : error {
  singular_error(const std::string& what, std::size_t rank_found)
      : error(what), rank(rank_found) {}
  std::size_t rank;
};

// Fewer contacted parties than the current threshold requires.
struct insufficient_parties_error : error {
  using error::error;
};

// A secret coordinate is not determined by the given readings.
struct decodability_error : error {
  using error::error;
};

// Readings or share contents are mutually inconsistent.
struct corruption_error : error {
  using error::error;
};

// Malformed share file.
struct format_error : error {
  using error::error;
};

// Filesystem or randomness-source failure.
struct io_error : error {
  using error::error;
};

// An exhaustive verification would exceed its operation budget.
struct budget_error : error {
  using error::error;
};

}  // namespace staircase
