#include "staircase/matrix.hpp"

#include <algorithm>
#include <string>

namespace staircase {

namespace {

constexpr std::size_t max_entries = std::size_t{1} << 26;

void check_size(std::size_t rows, std::size_t cols) {
  if (rows != 0 && cols > max_entries / rows) {
    throw param_error("matrix of " + std::to_string(rows) + "x" +
                      std::to_string(cols) + " entries is too large");
  }
}

}  // namespace

matrix::matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_size(rows, cols);
  entries_.assign(rows * cols, 0);
}

matrix matrix::identity(std::size_t n) {
  matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

matrix vandermonde(const field& f, std::span<const symbol> points,
                   std::size_t cols) {
  if (cols < 1) throw param_error("vandermonde needs at least one column");
  if (points.size() >= f.order()) {
    throw param_error("field order must exceed the number of points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    f.check(points[i]);
    if (points[i] == 0) {
      throw param_error("vandermonde point must be nonzero");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i] == points[j]) {
        throw param_error("vandermonde points must be pairwise distinct");
      }
    }
  }
  matrix m(points.size(), cols);
  for (std::size_t i = 0; i < points.size(); ++i) {
    symbol v = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      m.at(i, j) = v;
      v = f.mul(v, points[i]);
    }
  }
  return m;
}

matrix mat_mul(const field& f, const matrix& a, const matrix& b) {
  if (a.cols() != b.rows()) {
    throw param_error("dimension mismatch: " + std::to_string(a.cols()) +
                      " columns times " + std::to_string(b.rows()) + " rows");
  }
  check_size(a.rows(), b.cols());
  matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      symbol v = a.at(i, l);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.at(i, j) = f.add(c.at(i, j), f.mul(v, b.at(l, j)));
      }
    }
  }
  return c;
}

std::vector<std::size_t> reduced_row_echelon(const field& f, matrix& m,
                                             std::size_t pivot_col_limit) {
  std::vector<std::size_t> pivots;
  const std::size_t limit = std::min(m.cols(), pivot_col_limit);
  std::size_t pr = 0;  // next pivot row
  for (std::size_t c = 0; c < limit && pr < m.rows(); ++c) {
    std::size_t sel = pr;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m.at(sel, j), m.at(pr, j));
      }
    }
    symbol piv_inv = f.inv(m.at(pr, c));
    for (std::size_t j = c; j < m.cols(); ++j) {
      m.at(pr, j) = f.mul(m.at(pr, j), piv_inv);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pr) continue;
      symbol v = m.at(r, c);
      if (v == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        m.at(r, j) = f.sub(m.at(r, j), f.mul(v, m.at(pr, j)));
      }
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

matrix solve(const field& f, const matrix& a, const matrix& rhs) {
  if (a.rows() != a.cols()) {
    throw param_error("solve requires a square matrix");
  }
  if (a.rows() != rhs.rows()) {
    throw param_error("solve: rhs row count mismatch");
  }
  matrix aug = hconcat(a, rhs);
  std::vector<std::size_t> pivots = reduced_row_echelon(f, aug, a.cols());
  if (pivots.size() < a.cols()) {
    throw singular_error("singular system of size " + std::to_string(a.rows()),
                         pivots.size());
  }
  matrix x(a.cols(), rhs.cols());
  for (std::size_t r = 0; r < a.cols(); ++r) {
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
      x.at(r, c) = aug.at(r, a.cols() + c);
    }
  }
  return x;
}

std::size_t rank(const field& f, matrix a) {
  return reduced_row_echelon(f, a).size();
}

matrix select_rows(const matrix& m, std::span<const std::size_t> rows) {
  matrix out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= m.rows()) throw param_error("row index out of range");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out.at(i, c) = m.at(rows[i], c);
    }
  }
  return out;
}

matrix hconcat(const matrix& a, const matrix& b) {
  if (a.rows() != b.rows()) {
    throw param_error("hconcat: row count mismatch");
  }
  check_size(a.rows(), a.cols() + b.cols());
  matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) {
      out.at(r, a.cols() + c) = b.at(r, c);
    }
  }
  return out;
}

}  // namespace staircase
