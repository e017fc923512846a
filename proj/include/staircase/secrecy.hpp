#pragma once

// Secrecy verification and overhead accounting. Two independent
// verifiers are provided: an exact rank criterion over the coefficient
// maps, and a brute-force distributional check that enumerates every
// key assignment and compares the resulting view multisets across
// secrets. The constructions must pass both.
//
// For a linear scheme the view of a collusion set Z is
//   W_Z = A_Z . secret + B_Z . keys.
// With uniform keys, W_Z is independent of the secret iff the column
// space of A_Z lies inside the column space of B_Z, i.e.
// rank([A_Z | B_Z]) = rank(B_Z); and Z can decode, given the secret,
// every key that touches its view iff rank(B_Z) equals the number of
// such keys (z * alpha for untruncated shares).

#include <cstdint>
#include <utility>
#include <vector>

#include "staircase/rational.hpp"
#include "staircase/scheme.hpp"

namespace staircase {

// CO(d) = RO(d) = k z / (d - z) units; d must be supported.
std::pair<rational, rational> overheads(const scheme_params& p,
                                        std::uint32_t d);

struct secrecy_z_result {
  std::vector<std::uint32_t> zset;
  std::uint64_t rank_b = 0;
  std::uint64_t rank_ab = 0;
  bool keys_decodable = false;  // rank_b == active key count
  bool independent = false;     // rank_ab == rank_b
};

struct secrecy_report {
  std::vector<secrecy_z_result> per_z;
  std::uint64_t active_keys = 0;  // z * alpha unless shares are truncated
  bool pass = false;              // all independent and keys_decodable
};

// Exact criterion over all Z subsets of size z. visible_symbols limits
// each share to its first symbols (0 means all alpha); pass it when
// checking rethresholded shares.
secrecy_report check_secrecy_rank(const scheme_params& p, const layout& lay,
                                  const field& f,
                                  std::span<const symbol> points = {},
                                  std::uint64_t visible_symbols = 0);

// Distributional oracle: for every Z and every pair of secrets, the
// multiset of views over all q^(z*alpha) key assignments must be
// identical. secrets empty means all q^(k*alpha) secrets. The check
// refuses (budget_error) rather than silently sampling when the number
// of encodings would exceed the budget.
bool check_secrecy_exhaustive(const scheme_params& p, const layout& lay,
                              const field& f,
                              std::span<const std::vector<symbol>> secrets = {},
                              std::uint64_t budget = 10'000'000);

struct entropy_summary {
  std::uint64_t secret_symbols = 0;  // H(S) in base-q symbols
  std::uint64_t key_symbols = 0;     // H(R)
  std::uint64_t share_symbols = 0;   // H(W_i) = alpha
  rational share_units;              // always 1
};
entropy_summary entropy_accounting(const scheme_params& p);

}  // namespace staircase
