#include "staircase/scheme.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace staircase {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw param_error("scheme parameter overflow: share size too large");
  }
  return a * b;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

void check_base(std::uint32_t n, std::uint32_t k, std::uint32_t z) {
  if (k < 1) throw param_error("k >= 1 violated");
  if (z < 1) throw param_error("0 < z violated");
  if (std::uint64_t{k} + z > n) throw param_error("k + z <= n violated");
}

// Fills d_list, alpha_list, h and alpha from an already-sorted
// decreasing d_list ending with t.
void derive(scheme_params& p) {
  p.t = p.k + p.z;
  p.h = static_cast<std::uint32_t>(p.d_list.size());
  p.alpha_list.clear();
  for (std::uint32_t d : p.d_list) p.alpha_list.push_back(d - p.z);
  if (p.h == 1) {
    p.alpha = p.k;
  } else {
    std::uint64_t l = 1;
    for (std::uint32_t i = 0; i + 1 < p.h; ++i) {
      l = checked_lcm(l, p.alpha_list[i]);
    }
    p.alpha = l;
  }
  // Both products are used everywhere downstream; fail fast here.
  checked_mul(p.alpha, p.n);
  checked_mul(p.alpha, p.t);
}

}  // namespace

bool scheme_params::supports_d(std::uint32_t d) const {
  return std::find(d_list.begin(), d_list.end(), d) != d_list.end();
}

std::size_t scheme_params::d_index(std::uint32_t d) const {
  auto it = std::find(d_list.begin(), d_list.end(), d);
  if (it == d_list.end()) {
    throw param_error("d=" + std::to_string(d) +
                      " is not supported by this scheme");
  }
  return static_cast<std::size_t>(it - d_list.begin());
}

std::uint64_t scheme_params::read_len(std::uint32_t d) const {
  std::size_t j = d_index(d);
  return secret_symbols() / alpha_list[j];
}

std::uint64_t scheme_params::fingerprint() const {
  std::uint64_t h64 = 1469598103934665603ull;
  auto mix = [&h64](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h64 ^= (v >> (8 * i)) & 0xff;
      h64 *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(kind));
  mix(n);
  mix(k);
  mix(z);
  mix(d_fixed);
  for (std::uint32_t d : delta_set) mix(d);
  return h64;
}

scheme_params params_fixed(std::uint32_t n, std::uint32_t k, std::uint32_t z,
                           std::uint32_t d) {
  check_base(n, k, z);
  if (d < k + z) throw param_error("k + z <= d violated");
  if (d > n) throw param_error("d <= n violated");
  scheme_params p;
  p.kind = scheme_kind::fixed;
  p.n = n;
  p.k = k;
  p.z = z;
  p.d_fixed = d;
  p.d_list = (d == k + z) ? std::vector<std::uint32_t>{d}
                          : std::vector<std::uint32_t>{d, k + z};
  derive(p);
  return p;
}

scheme_params params_universal(std::uint32_t n, std::uint32_t k,
                               std::uint32_t z) {
  check_base(n, k, z);
  scheme_params p;
  p.kind = scheme_kind::universal;
  p.n = n;
  p.k = k;
  p.z = z;
  for (std::uint32_t d = n; d >= k + z; --d) p.d_list.push_back(d);
  derive(p);
  return p;
}

scheme_params params_delta(std::uint32_t n, std::uint32_t k, std::uint32_t z,
                           std::vector<std::uint32_t> delta) {
  check_base(n, k, z);
  if (delta.empty()) throw param_error("delta set must be nonempty");
  for (std::uint32_t d : delta) {
    if (d < k + z || d > n) {
      throw param_error("delta value " + std::to_string(d) +
                        " outside [k+z, n]");
    }
  }
  scheme_params p;
  p.kind = scheme_kind::delta;
  p.n = n;
  p.k = k;
  p.z = z;
  delta.push_back(k + z);
  std::sort(delta.begin(), delta.end(), std::greater<>());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
  p.d_list = delta;
  p.delta_set = delta;
  derive(p);
  return p;
}

layout build_layout(const scheme_params& p) {
  const std::uint64_t alpha = p.alpha;
  const std::uint32_t z = p.z, k = p.k, t = p.t;

  layout lay;
  lay.cols = alpha;

  if (p.kind == scheme_kind::fixed) {
    const std::uint32_t d = p.d_fixed;
    lay.rows = d;
    lay.grid.assign(checked_mul(lay.rows, lay.cols), cell{});

    // Left column block, width k: the secret stacked over the first key
    // group, filled column-major.
    for (std::uint32_t c = 0; c < k; ++c) {
      for (std::uint64_t r = 0; r < alpha; ++r) {
        lay.at(static_cast<std::uint32_t>(r), c) =
            cell{cell::kind::secret, c * alpha + r, 0, 0};
      }
      for (std::uint32_t r = 0; r < z; ++r) {
        lay.at(static_cast<std::uint32_t>(alpha) + r, c) =
            cell{cell::kind::key, std::uint64_t{c} * z + r, 0, 0};
      }
    }
    lay.blocks.push_back({0, k, d});

    // Right column block, width alpha - k: the transpose of the last
    // alpha - k rows of the left block, then fresh keys, then zeros.
    const std::uint64_t dcols = alpha - k;
    if (dcols > 0) {
      for (std::uint64_t j = 0; j < dcols; ++j) {
        for (std::uint32_t i = 0; i < k; ++i) {
          lay.at(i, k + j) =
              cell{cell::kind::dup, 0, t + static_cast<std::uint32_t>(j), i};
        }
        for (std::uint32_t r = 0; r < z; ++r) {
          lay.at(k + r, k + j) =
              cell{cell::kind::key, std::uint64_t{z} * k + j * z + r, 0, 0};
        }
      }
      lay.blocks.push_back({k, dcols, t});
    }
    return lay;
  }

  // Universal and delta share the block construction; only d_list
  // differs. Block 1 holds the secret over keys; block j >= 2 holds
  // duplicates of rows d_j .. d_{j-1}-1 of the preceding blocks, over
  // fresh keys, over zeros.
  lay.rows = p.n;
  lay.grid.assign(checked_mul(lay.rows, lay.cols), cell{});

  const std::uint64_t k_alpha = p.secret_symbols();
  std::uint64_t next_secret = 0;
  std::uint64_t next_key = 0;
  std::uint64_t col_cursor = 0;
  for (std::uint32_t j = 0; j < p.h; ++j) {
    const std::uint64_t aj = p.alpha_list[j];
    const std::uint64_t cum = k_alpha / aj;
    const std::uint64_t cols_j = cum - col_cursor;
    const std::uint32_t dj = p.d_list[j];

    if (j == 0) {
      for (std::uint64_t c = 0; c < cols_j; ++c) {
        for (std::uint64_t r = 0; r < aj; ++r) {
          lay.at(static_cast<std::uint32_t>(r), c) =
              cell{cell::kind::secret, next_secret++, 0, 0};
        }
      }
    } else {
      // Source cells traversed column-major across the duplicated row
      // band, placed column-major into the aj x cols_j duplicate block.
      // A source that is itself a duplicate resolves to its primary, so
      // every duplicate in the grid points one hop from home.
      const std::uint32_t band_lo = dj;                // first duplicated row
      const std::uint32_t band_hi = p.d_list[j - 1];   // one past the last
      std::uint64_t sc = 0;
      std::uint32_t sr = band_lo;
      for (std::uint64_t c = 0; c < cols_j; ++c) {
        for (std::uint64_t r = 0; r < aj; ++r) {
          const cell& src = lay.at(sr, sc);
          lay.at(static_cast<std::uint32_t>(r), col_cursor + c) =
              src.k == cell::kind::dup
                  ? cell{cell::kind::dup, 0, src.src_row, src.src_col}
                  : cell{cell::kind::dup, 0, sr, sc};
          if (++sr == band_hi) {
            sr = band_lo;
            ++sc;
          }
        }
      }
    }
    for (std::uint64_t c = 0; c < cols_j; ++c) {
      for (std::uint32_t r = 0; r < z; ++r) {
        lay.at(static_cast<std::uint32_t>(aj) + r, col_cursor + c) =
            cell{cell::kind::key, next_key++, 0, 0};
      }
    }
    lay.blocks.push_back({col_cursor, cols_j, dj});
    col_cursor += cols_j;
  }
  return lay;
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> secret_locations(
    const scheme_params& p, const layout& lay) {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> locs(
      p.secret_symbols(), {0, 0});
  for (std::uint32_t r = 0; r < lay.rows; ++r) {
    for (std::uint64_t c = 0; c < lay.cols; ++c) {
      const cell& cl = lay.at(r, c);
      if (cl.k == cell::kind::secret) locs[cl.index] = {r, c};
    }
  }
  return locs;
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> key_locations(
    const scheme_params& p, const layout& lay) {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> locs(p.key_symbols(),
                                                            {0, 0});
  for (std::uint32_t r = 0; r < lay.rows; ++r) {
    for (std::uint64_t c = 0; c < lay.cols; ++c) {
      const cell& cl = lay.at(r, c);
      if (cl.k == cell::kind::key) locs[cl.index] = {r, c};
    }
  }
  return locs;
}

std::vector<symbol> default_points(const field& f, std::uint32_t n) {
  if (f.order() <= n) {
    throw param_error("field order must exceed the party count");
  }
  std::vector<symbol> pts(n);
  for (std::uint32_t i = 0; i < n; ++i) pts[i] = static_cast<symbol>(i + 1);
  return pts;
}

void coefficient_row(const layout& lay, const field& f, symbol point,
                     std::uint64_t pos, std::span<symbol> a_row,
                     std::span<symbol> b_row) {
  std::fill(a_row.begin(), a_row.end(), symbol{0});
  std::fill(b_row.begin(), b_row.end(), symbol{0});
  symbol v = 1;  // point^r
  for (std::uint32_t r = 0; r < lay.rows; ++r) {
    const cell* cl = &lay.at(r, pos);
    if (cl->k == cell::kind::dup) cl = &lay.at(cl->src_row, cl->src_col);
    switch (cl->k) {
      case cell::kind::secret:
        a_row[cl->index] = f.add(a_row[cl->index], v);
        break;
      case cell::kind::key:
        b_row[cl->index] = f.add(b_row[cl->index], v);
        break;
      case cell::kind::zero:
        break;
      case cell::kind::dup:
        throw corruption_error("duplicate cell points at a duplicate");
    }
    v = f.mul(v, point);
  }
}

coeff_maps coefficient_maps(const scheme_params& p, const layout& lay,
                            const field& f, std::span<const symbol> points) {
  std::vector<symbol> default_pts;
  if (points.empty()) {
    default_pts = default_points(f, p.n);
    points = default_pts;
  }
  if (points.size() != p.n) {
    throw param_error("need one evaluation point per party");
  }
  vandermonde(f, points, 1);  // validates distinct nonzero points
  const std::uint64_t alpha = p.alpha;
  coeff_maps maps{matrix(p.n * alpha, p.secret_symbols()),
                  matrix(p.n * alpha, p.key_symbols())};
  for (std::uint32_t i = 0; i < p.n; ++i) {
    for (std::uint64_t pos = 0; pos < alpha; ++pos) {
      std::size_t row = std::size_t{i} * alpha + pos;
      coefficient_row(lay, f, points[i], pos, maps.a.row(row),
                      maps.b.row(row));
    }
  }
  return maps;
}

}  // namespace staircase
