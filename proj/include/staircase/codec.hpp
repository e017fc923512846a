#pragma once

// Encoding (shares as rows of V . M), access planning, and the two
// decoders: the structured peeling decoder that walks the layout blocks
// from last to first, and a generic linear-solve oracle that only
// trusts the coefficient maps. Both must agree on every input; tests
// enforce it.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "staircase/random.hpp"
#include "staircase/rational.hpp"
#include "staircase/scheme.hpp"

namespace staircase {

struct share {
  std::uint32_t party = 0;  // 0-based
  symbol eval_point = 0;
  std::vector<symbol> symbols;
  std::uint32_t current_threshold = 0;
  std::uint64_t params_fp = 0;
};

struct read_plan {
  std::uint32_t d = 0;                   // chosen supported size
  std::vector<std::uint32_t> parties;    // exactly d, ascending
  std::uint64_t symbols_per_party = 0;   // prefix 0..len-1 of each share
  rational co;                           // in units
  rational ro;
};

// One fetched symbol, keyed by (party, position) so arrival order never
// matters.
struct symbol_reading {
  std::uint32_t party = 0;
  std::uint64_t pos = 0;
  symbol value = 0;
};

// count uniform field symbols. Prime fields use rejection sampling so
// there is no modulo bias.
std::vector<symbol> draw_symbols(std::uint64_t count, const field& f,
                                 random_source& src);

// The z * alpha keys of one encoding, uniform and independent of
// everything else.
inline std::vector<symbol> draw_keys(const scheme_params& p, const field& f,
                                     random_source& src) {
  return draw_symbols(p.key_symbols(), f, src);
}

// n shares, one per party; share i is row i of V . M with the layout
// instantiated at the given secret and keys.
std::vector<share> encode(const scheme_params& p, const layout& lay,
                          const field& f, std::span<const symbol> secret,
                          std::span<const symbol> keys,
                          std::span<const symbol> points = {});

// Picks the largest supported d <= |contacted| with d >= threshold_state,
// the lowest-indexed d parties, and the per-share prefix length.
read_plan access_plan(const scheme_params& p,
                      std::span<const std::uint32_t> contacted,
                      std::uint32_t threshold_state);

// Peeling decoder: for blocks j down to 1, subtract rows already known
// through duplicates, truncate zero rows, solve the square Vandermonde
// system, and record every newly determined primary cell. party_points
// is indexed by party; only entries for planned parties are read.
std::vector<symbol> decode_structured(
    const scheme_params& p, const layout& lay, const field& f,
    const read_plan& plan, std::span<const symbol> party_points,
    std::span<const symbol_reading> readings);

// Same, but also exposes which keys the peel happened to determine.
// Exists for the secrecy and accounting harnesses only.
struct decode_trace {
  std::vector<symbol> secret;
  std::map<std::uint64_t, symbol> keys;  // key ordinal -> value
};
decode_trace decode_structured_trace(const scheme_params& p,
                                     const layout& lay, const field& f,
                                     const read_plan& plan,
                                     std::span<const symbol> party_points,
                                     std::span<const symbol_reading> readings);

// Independent decoder: builds the exact linear system from the
// coefficient rows of the planned readings, eliminates, and demands a
// unique value for every secret coordinate.
std::vector<symbol> decode_oracle(const scheme_params& p, const layout& lay,
                                  const field& f, const read_plan& plan,
                                  std::span<const symbol> party_points,
                                  std::span<const symbol_reading> readings);

// Value-free factorization of the oracle: secret = map . readings,
// with readings ordered (plan.parties[0], pos 0..len-1), (parties[1],
// ...), and so on. consistency has one row per redundant equation; a
// nonzero product with the readings means corruption.
struct recon_map {
  matrix secret_from_reads;  // (k * alpha) x L
  matrix consistency;        // m x L, possibly zero rows
};
recon_map reconstruction_map(const scheme_params& p, const layout& lay,
                             const field& f, const read_plan& plan,
                             std::span<const symbol> party_points);

}  // namespace staircase
