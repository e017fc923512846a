#include "staircase/secrecy.hpp"

#include <algorithm>
#include <string>

#include "staircase/codec.hpp"

namespace staircase {

namespace {

// All size-z subsets of [0, n), lexicographic.
bool next_subset(std::vector<std::uint32_t>& s, std::uint32_t n) {
  const std::size_t z = s.size();
  std::size_t i = z;
  while (i-- > 0) {
    if (s[i] + 1 <= n - (z - i)) {
      ++s[i];
      for (std::size_t j = i + 1; j < z; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::uint32_t> first_subset(std::uint32_t z) {
  std::vector<std::uint32_t> s(z);
  for (std::uint32_t i = 0; i < z; ++i) s[i] = i;
  return s;
}

}  // namespace

std::pair<rational, rational> overheads(const scheme_params& p,
                                        std::uint32_t d) {
  p.d_index(d);
  rational co(bigint(std::uint64_t{p.k} * p.z), bigint(d - p.z));
  return {co, co};
}

secrecy_report check_secrecy_rank(const scheme_params& p, const layout& lay,
                                  const field& f,
                                  std::span<const symbol> points,
                                  std::uint64_t visible_symbols) {
  const std::uint64_t vis = visible_symbols == 0 ? p.alpha : visible_symbols;
  if (vis > p.alpha) throw param_error("visible symbols exceed share size");
  coeff_maps maps = coefficient_maps(p, lay, f, points);
  const std::uint64_t za = p.key_symbols();

  // Keys that touch any visible symbol of any party.
  std::vector<bool> active(za, false);
  for (std::uint32_t i = 0; i < p.n; ++i) {
    for (std::uint64_t pos = 0; pos < vis; ++pos) {
      auto row = maps.b.row(std::size_t{i} * p.alpha + pos);
      for (std::uint64_t j = 0; j < za; ++j) {
        if (row[j] != 0) active[j] = true;
      }
    }
  }
  secrecy_report report;
  report.active_keys =
      static_cast<std::uint64_t>(std::count(active.begin(), active.end(), true));

  report.pass = true;
  std::vector<std::uint32_t> zset = first_subset(p.z);
  do {
    std::vector<std::size_t> rows;
    rows.reserve(std::size_t{p.z} * vis);
    for (std::uint32_t party : zset) {
      for (std::uint64_t pos = 0; pos < vis; ++pos) {
        rows.push_back(std::size_t{party} * p.alpha + pos);
      }
    }
    matrix bz = select_rows(maps.b, rows);
    secrecy_z_result res;
    res.zset = zset;
    res.rank_b = rank(f, bz);
    if (res.rank_b == rows.size()) {
      // Full row rank forces rank([A|B]) = rank(B); no need to eliminate
      // the wide matrix.
      res.rank_ab = res.rank_b;
    } else {
      matrix az = select_rows(maps.a, rows);
      res.rank_ab = rank(f, hconcat(az, bz));
    }
    res.keys_decodable = res.rank_b == report.active_keys;
    res.independent = res.rank_ab == res.rank_b;
    report.pass = report.pass && res.keys_decodable && res.independent;
    report.per_z.push_back(std::move(res));
  } while (next_subset(zset, p.n));
  return report;
}

bool check_secrecy_exhaustive(const scheme_params& p, const layout& lay,
                              const field& f,
                              std::span<const std::vector<symbol>> secrets,
                              std::uint64_t budget) {
  const std::uint64_t ka = p.secret_symbols();
  const std::uint64_t za = p.key_symbols();
  const std::uint64_t q = f.order();

  // q^(z*alpha) key assignments; refuse if the count overflows or blows
  // the budget.
  std::uint64_t key_count = 1;
  for (std::uint64_t i = 0; i < za; ++i) {
    if (key_count > budget / q) {
      throw budget_error("key space too large for exhaustive enumeration");
    }
    key_count *= q;
  }

  std::uint64_t secret_count;
  if (secrets.empty()) {
    std::uint64_t sc = 1;
    for (std::uint64_t i = 0; i < ka; ++i) {
      if (sc > budget / q) {
        throw budget_error("secret space too large for exhaustive enumeration");
      }
      sc *= q;
    }
    secret_count = sc;
  } else {
    for (const auto& s : secrets) {
      if (s.size() != ka) {
        throw param_error("secret sample has the wrong length");
      }
      for (symbol v : s) f.check(v);
    }
    secret_count = secrets.size();
  }
  if (secret_count > budget / key_count) {
    throw budget_error("enumeration of " + std::to_string(secret_count) +
                       " secrets x " + std::to_string(key_count) +
                       " keys exceeds the budget");
  }

  std::vector<symbol> points = default_points(f, p.n);
  matrix v = vandermonde(f, points, lay.rows);

  // Z subsets, fixed order.
  std::vector<std::vector<std::uint32_t>> zsets;
  {
    std::vector<std::uint32_t> zset = first_subset(p.z);
    do {
      zsets.push_back(zset);
    } while (next_subset(zset, p.n));
  }

  // View multiset of one secret, per Z.
  std::vector<symbol> secret_buf(ka), keys(za, 0);
  matrix m(lay.rows, lay.cols);
  auto views_for = [&](std::span<const symbol> secret) {
    std::vector<std::vector<std::vector<symbol>>> views(
        zsets.size(),
        std::vector<std::vector<symbol>>(key_count));
    std::fill(keys.begin(), keys.end(), symbol{0});
    for (std::uint64_t ki = 0;; ++ki) {
      for (std::uint32_t r = 0; r < lay.rows; ++r) {
        for (std::uint64_t c = 0; c < lay.cols; ++c) {
          const cell* cl = &lay.at(r, c);
          if (cl->k == cell::kind::dup) cl = &lay.at(cl->src_row, cl->src_col);
          switch (cl->k) {
            case cell::kind::secret:
              m.at(r, c) = secret[cl->index];
              break;
            case cell::kind::key:
              m.at(r, c) = keys[cl->index];
              break;
            default:
              m.at(r, c) = 0;
          }
        }
      }
      matrix c = mat_mul(f, v, m);
      for (std::size_t zi = 0; zi < zsets.size(); ++zi) {
        std::vector<symbol> view;
        view.reserve(std::size_t{p.z} * p.alpha);
        for (std::uint32_t party : zsets[zi]) {
          auto row = c.row(party);
          view.insert(view.end(), row.begin(), row.end());
        }
        views[zi][ki] = std::move(view);
      }
      // Odometer over the key symbols.
      std::uint64_t digit = 0;
      while (digit < za) {
        if (++keys[digit] < q) break;
        keys[digit] = 0;
        ++digit;
      }
      if (digit == za) break;
    }
    for (auto& per_z : views) std::sort(per_z.begin(), per_z.end());
    return views;
  };

  auto secret_at = [&](std::uint64_t idx) -> std::span<const symbol> {
    if (!secrets.empty()) return secrets[idx];
    std::uint64_t v2 = idx;
    for (std::uint64_t i = 0; i < ka; ++i) {
      secret_buf[i] = static_cast<symbol>(v2 % q);
      v2 /= q;
    }
    return secret_buf;
  };

  auto reference = views_for(secret_at(0));
  for (std::uint64_t si = 1; si < secret_count; ++si) {
    auto views = views_for(secret_at(si));
    if (views != reference) return false;
  }
  return true;
}

entropy_summary entropy_accounting(const scheme_params& p) {
  if (p.k != p.t - p.z) {
    throw param_error("secret size must equal t - z units");
  }
  entropy_summary s;
  s.secret_symbols = p.secret_symbols();
  s.key_symbols = p.key_symbols();
  s.share_symbols = p.alpha;
  s.share_units = rational::of(1);
  return s;
}

}  // namespace staircase
