#pragma once

// Scheme parameter derivation and the message-matrix layout for the
// three constructions:
//  - fixed:     optimal overheads at one chosen d (plus at t);
//  - universal: optimal overheads for every d in [t, n];
//  - delta:     optimal overheads for a chosen subset of d values.
//
// A layout records, for every cell of the message matrix M, where its
// value comes from: a secret symbol, a key symbol, a duplicate of an
// earlier primary cell, or zero. Encoders and decoders work purely off
// this provenance grid, so placement conventions live here and nowhere
// else.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "staircase/matrix.hpp"

namespace staircase {

enum class scheme_kind : std::uint8_t { fixed = 0, universal = 1, delta = 2 };

struct scheme_params {
  scheme_kind kind = scheme_kind::universal;
  std::uint32_t n = 0, k = 0, z = 0;
  std::uint32_t d_fixed = 0;                // kind == fixed only
  std::vector<std::uint32_t> delta_set;     // kind == delta; equals d_list

  // Derived quantities.
  std::uint32_t t = 0;                      // k + z
  std::vector<std::uint32_t> d_list;        // decreasing, ends with t
  std::vector<std::uint64_t> alpha_list;    // d_i - z; last equals k
  std::uint32_t h = 0;                      // d_list.size()
  std::uint64_t alpha = 0;                  // symbols per share

  std::uint64_t secret_symbols() const { return std::uint64_t{k} * alpha; }
  std::uint64_t key_symbols() const { return std::uint64_t{z} * alpha; }

  bool supports_d(std::uint32_t d) const;
  std::size_t d_index(std::uint32_t d) const;  // throws param_error
  // Prefix length a reader contacting d parties fetches per share:
  // k * alpha / (d - z).
  std::uint64_t read_len(std::uint32_t d) const;

  std::uint64_t fingerprint() const;
};

scheme_params params_fixed(std::uint32_t n, std::uint32_t k, std::uint32_t z,
                           std::uint32_t d);
scheme_params params_universal(std::uint32_t n, std::uint32_t k,
                               std::uint32_t z);
scheme_params params_delta(std::uint32_t n, std::uint32_t k, std::uint32_t z,
                           std::vector<std::uint32_t> delta);

struct cell {
  enum class kind : std::uint8_t { zero = 0, secret = 1, key = 2, dup = 3 };
  kind k = kind::zero;
  std::uint64_t index = 0;     // secret / key ordinal
  std::uint32_t src_row = 0;   // dup source (always a primary cell)
  std::uint64_t src_col = 0;

  bool operator==(const cell&) const = default;
};

struct layout_block {
  std::uint64_t col_start = 0;
  std::uint64_t col_count = 0;
  std::uint32_t nonzero_rows = 0;  // equals the block's supported d
};

struct layout {
  std::uint32_t rows = 0;  // d for fixed, n otherwise
  std::uint64_t cols = 0;  // alpha
  std::vector<cell> grid;  // row-major
  std::vector<layout_block> blocks;

  const cell& at(std::uint32_t r, std::uint64_t c) const {
    return grid[std::size_t{r} * cols + c];
  }
  cell& at(std::uint32_t r, std::uint64_t c) {
    return grid[std::size_t{r} * cols + c];
  }
};

layout build_layout(const scheme_params& p);

// (row, col) of each primary cell, by ordinal.
std::vector<std::pair<std::uint32_t, std::uint64_t>> secret_locations(
    const scheme_params& p, const layout& lay);
std::vector<std::pair<std::uint32_t, std::uint64_t>> key_locations(
    const scheme_params& p, const layout& lay);

// Evaluation points 1..n; requires field order > n.
std::vector<symbol> default_points(const field& f, std::uint32_t n);

// Coefficients of one share symbol over (secret, keys): the symbol a
// party with the given evaluation point holds at the given position
// equals a_row . secret + b_row . keys. Duplicate cells contribute at
// their source's coordinates; zero cells contribute nothing.
void coefficient_row(const layout& lay, const field& f, symbol point,
                     std::uint64_t pos, std::span<symbol> a_row,
                     std::span<symbol> b_row);

// Full linearization: share symbol (party i, position p) is row
// i * alpha + p of both maps, so that all shares = a . secret + b . keys.
struct coeff_maps {
  matrix a;  // (n * alpha) x (k * alpha)
  matrix b;  // (n * alpha) x (z * alpha)
};
coeff_maps coefficient_maps(const scheme_params& p, const layout& lay,
                            const field& f,
                            std::span<const symbol> points = {});

}  // namespace staircase
