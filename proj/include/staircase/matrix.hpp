#pragma once

// Dense matrices over a field: Vandermonde construction, multiplication
// and Gaussian elimination (solve, rank, reduced echelon form).
// Matrices are plain immutable-by-convention values; every operation is
// pure and takes the field as an explicit context.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "staircase/field.hpp"

namespace staircase {

class matrix {
 public:
  matrix() = default;
  matrix(std::size_t rows, std::size_t cols);  // zero-filled

  static matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  symbol at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  symbol& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const symbol> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<symbol> row(std::size_t r) {
    return {entries_.data() + r * cols_, cols_};
  }

  bool operator==(const matrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<symbol> entries_;  // row-major
};

// Entry (i, j) = points[i]^j for j in [0, cols). Points must be pairwise
// distinct and nonzero so that every square submatrix formed by
// consecutive columns stays invertible.
matrix vandermonde(const field& f, std::span<const symbol> points,
                   std::size_t cols);

matrix mat_mul(const field& f, const matrix& a, const matrix& b);

// Solves a * x = rhs for square invertible a; throws singular_error
// (carrying the rank found) otherwise.
matrix solve(const field& f, const matrix& a, const matrix& rhs);

std::size_t rank(const field& f, matrix a);

// In-place reduction to reduced row echelon form; returns the pivot
// column of each pivot row, in row order. Pivoting picks the first
// nonzero entry scanning down, so results are deterministic. Pivots are
// sought only in columns below pivot_col_limit; row operations still
// apply to whole rows, so trailing columns act as a tracked right-hand
// side.
std::vector<std::size_t> reduced_row_echelon(
    const field& f, matrix& m,
    std::size_t pivot_col_limit = static_cast<std::size_t>(-1));

matrix select_rows(const matrix& m, std::span<const std::size_t> rows);
matrix hconcat(const matrix& a, const matrix& b);

}  // namespace staircase
