#include "staircase/codec.hpp"

#include <algorithm>
#include <string>

#include "staircase/secrecy.hpp"

namespace staircase {

namespace {

symbol cell_value(const layout& lay, const cell& cl,
                  std::span<const symbol> secret,
                  std::span<const symbol> keys) {
  switch (cl.k) {
    case cell::kind::secret:
      return secret[cl.index];
    case cell::kind::key:
      return keys[cl.index];
    case cell::kind::zero:
      return 0;
    case cell::kind::dup: {
      const cell& src = lay.at(cl.src_row, cl.src_col);
      if (src.k == cell::kind::dup) {
        throw corruption_error("duplicate cell points at a duplicate");
      }
      return cell_value(lay, src, secret, keys);
    }
  }
  throw corruption_error("unknown cell kind");
}

// Evaluation points of the planned parties, in plan order, validated
// distinct and nonzero.
std::vector<symbol> plan_points(const field& f, const read_plan& plan,
                                std::span<const symbol> party_points) {
  if (plan.parties.size() != plan.d) {
    throw param_error("malformed plan: party count does not match d");
  }
  std::vector<symbol> pts;
  pts.reserve(plan.parties.size());
  for (std::uint32_t party : plan.parties) {
    if (party >= party_points.size()) {
      throw param_error("no evaluation point for party " +
                        std::to_string(party));
    }
    pts.push_back(party_points[party]);
  }
  vandermonde(f, pts, 1);  // validates
  return pts;
}

// Readings as a (party-slot x position) grid, plan order.
matrix index_readings(const field& f, const read_plan& plan,
                      std::span<const symbol_reading> readings) {
  std::map<std::pair<std::uint32_t, std::uint64_t>, symbol> got;
  for (const symbol_reading& r : readings) {
    f.check(r.value);
    auto [it, fresh] = got.emplace(std::make_pair(r.party, r.pos), r.value);
    if (!fresh && it->second != r.value) {
      throw corruption_error("conflicting readings for one symbol");
    }
  }
  matrix reads(plan.parties.size(), plan.symbols_per_party);
  for (std::size_t i = 0; i < plan.parties.size(); ++i) {
    for (std::uint64_t pos = 0; pos < plan.symbols_per_party; ++pos) {
      auto it = got.find({plan.parties[i], pos});
      if (it == got.end()) {
        throw param_error("reading missing for party " +
                          std::to_string(plan.parties[i]) + " position " +
                          std::to_string(pos));
      }
      reads.at(i, pos) = it->second;
    }
  }
  return reads;
}

}  // namespace

std::vector<symbol> draw_symbols(std::uint64_t count, const field& f,
                                 random_source& src) {
  std::vector<symbol> out;
  out.reserve(count);
  if (f.spec().kind == field_kind::binary8) {
    std::vector<std::uint8_t> buf(count);
    src.fill(buf);
    out.assign(buf.begin(), buf.end());
    return out;
  }
  const std::uint32_t q = f.order();
  const std::uint32_t limit = 65536u - (65536u % q);
  std::uint8_t b[2];
  while (out.size() < count) {
    src.fill(std::span<std::uint8_t>(b, 2));
    std::uint32_t v = (std::uint32_t{b[0]} << 8) | b[1];
    if (v < limit) out.push_back(static_cast<symbol>(v % q));
  }
  return out;
}

std::vector<share> encode(const scheme_params& p, const layout& lay,
                          const field& f, std::span<const symbol> secret,
                          std::span<const symbol> keys,
                          std::span<const symbol> points) {
  if (secret.size() != p.secret_symbols()) {
    throw param_error("secret must have exactly k*alpha symbols");
  }
  if (keys.size() != p.key_symbols()) {
    throw param_error("keys must have exactly z*alpha symbols");
  }
  for (symbol s : secret) f.check(s);
  for (symbol s : keys) f.check(s);
  std::vector<symbol> default_pts;
  if (points.empty()) {
    default_pts = default_points(f, p.n);
    points = default_pts;
  }
  if (points.size() != p.n) {
    throw param_error("need one evaluation point per party");
  }

  matrix m(lay.rows, lay.cols);
  for (std::uint32_t r = 0; r < lay.rows; ++r) {
    for (std::uint64_t c = 0; c < lay.cols; ++c) {
      m.at(r, c) = cell_value(lay, lay.at(r, c), secret, keys);
    }
  }
  matrix v = vandermonde(f, points, lay.rows);
  matrix c = mat_mul(f, v, m);

  std::vector<share> shares(p.n);
  const std::uint64_t fp = p.fingerprint();
  for (std::uint32_t i = 0; i < p.n; ++i) {
    shares[i].party = i;
    shares[i].eval_point = points[i];
    shares[i].symbols.assign(c.row(i).begin(), c.row(i).end());
    shares[i].current_threshold = p.t;
    shares[i].params_fp = fp;
  }
  return shares;
}

read_plan access_plan(const scheme_params& p,
                      std::span<const std::uint32_t> contacted,
                      std::uint32_t threshold_state) {
  p.d_index(threshold_state);  // threshold must be a supported size
  std::vector<std::uint32_t> uniq(contacted.begin(), contacted.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  for (std::uint32_t idx : uniq) {
    if (idx >= p.n) {
      throw param_error("party index " + std::to_string(idx) +
                        " out of range");
    }
  }
  if (uniq.size() < threshold_state) {
    throw insufficient_parties_error(
        "contacted " + std::to_string(uniq.size()) + " parties, need " +
        std::to_string(threshold_state));
  }
  std::uint32_t chosen = 0;
  for (std::uint32_t d : p.d_list) {
    if (d <= uniq.size() && d >= threshold_state) {
      chosen = d;
      break;
    }
  }
  if (chosen == 0) {
    throw insufficient_parties_error("no supported reconstruction size fits");
  }
  read_plan plan;
  plan.d = chosen;
  plan.parties.assign(uniq.begin(), uniq.begin() + chosen);
  plan.symbols_per_party = p.read_len(chosen);
  auto [co, ro] = overheads(p, chosen);
  plan.co = co;
  plan.ro = ro;
  return plan;
}

decode_trace decode_structured_trace(const scheme_params& p,
                                     const layout& lay, const field& f,
                                     const read_plan& plan,
                                     std::span<const symbol> party_points,
                                     std::span<const symbol_reading> readings) {
  if (plan.symbols_per_party != p.read_len(plan.d)) {
    throw param_error("plan prefix length does not match the scheme");
  }
  std::vector<symbol> pts = plan_points(f, plan, party_points);
  matrix reads = index_readings(f, plan, readings);

  // Number of whole blocks the prefix covers.
  std::size_t jb = 0;
  std::uint64_t cum = 0;
  for (const layout_block& blk : lay.blocks) {
    cum = blk.col_start + blk.col_count;
    ++jb;
    if (cum == plan.symbols_per_party) break;
  }
  if (cum != plan.symbols_per_party) {
    throw param_error("plan prefix does not align with block boundaries");
  }

  // Powers of each planned party's point, point^row.
  matrix vp(plan.parties.size(), lay.rows);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    symbol v = 1;
    for (std::uint32_t r = 0; r < lay.rows; ++r) {
      vp.at(i, r) = v;
      v = f.mul(v, pts[i]);
    }
  }

  std::map<std::pair<std::uint32_t, std::uint64_t>, symbol> decoded;
  auto prim_coord = [&lay](std::uint32_t r, std::uint64_t c) {
    const cell& cl = lay.at(r, c);
    if (cl.k == cell::kind::dup) return std::make_pair(cl.src_row, cl.src_col);
    return std::make_pair(r, c);
  };
  auto known_value = [&](std::uint32_t r, std::uint64_t c,
                         symbol* out) -> bool {
    const cell& cl = lay.at(r, c);
    if (cl.k == cell::kind::zero) {
      *out = 0;
      return true;
    }
    auto it = decoded.find(prim_coord(r, c));
    if (it == decoded.end()) return false;
    *out = it->second;
    return true;
  };

  for (std::size_t bi = jb; bi-- > 0;) {
    const layout_block& blk = lay.blocks[bi];
    std::vector<std::uint32_t> unknown, known;
    for (std::uint32_t r = 0; r < lay.rows; ++r) {
      bool all_zero = true, all_known = true;
      for (std::uint64_t cc = 0; cc < blk.col_count; ++cc) {
        const std::uint64_t c = blk.col_start + cc;
        if (lay.at(r, c).k != cell::kind::zero) all_zero = false;
        symbol tmp = 0;
        if (!known_value(r, c, &tmp)) all_known = false;
      }
      if (all_zero) continue;
      if (all_known) {
        known.push_back(r);
      } else {
        unknown.push_back(r);
      }
    }
    if (unknown.size() != plan.parties.size()) {
      throw corruption_error("peel: unknown row count mismatch in block " +
                             std::to_string(bi + 1));
    }
    for (std::size_t i = 0; i < unknown.size(); ++i) {
      if (unknown[i] != i) {
        throw corruption_error("peel: unknown rows are not a prefix");
      }
    }

    matrix lhs(plan.parties.size(), unknown.size());
    for (std::size_t i = 0; i < plan.parties.size(); ++i) {
      for (std::size_t j = 0; j < unknown.size(); ++j) {
        lhs.at(i, j) = vp.at(i, unknown[j]);
      }
    }
    matrix rhs(plan.parties.size(), blk.col_count);
    for (std::size_t i = 0; i < plan.parties.size(); ++i) {
      for (std::uint64_t cc = 0; cc < blk.col_count; ++cc) {
        const std::uint64_t c = blk.col_start + cc;
        symbol v = reads.at(i, c);
        for (std::uint32_t r : known) {
          symbol val = 0;
          known_value(r, c, &val);
          v = f.sub(v, f.mul(vp.at(i, r), val));
        }
        rhs.at(i, cc) = v;
      }
    }
    matrix x;
    try {
      x = solve(f, lhs, rhs);
    } catch (const singular_error&) {
      throw corruption_error("peel: singular block system");
    }
    for (std::size_t j = 0; j < unknown.size(); ++j) {
      for (std::uint64_t cc = 0; cc < blk.col_count; ++cc) {
        const std::uint64_t c = blk.col_start + cc;
        const cell& cl = lay.at(unknown[j], c);
        if (cl.k == cell::kind::zero) continue;
        auto coord = prim_coord(unknown[j], c);
        auto [it, fresh] = decoded.emplace(coord, x.at(j, cc));
        if (!fresh && it->second != x.at(j, cc)) {
          throw corruption_error("inconsistent duplicate resolution");
        }
      }
    }
  }

  decode_trace out;
  out.secret.assign(p.secret_symbols(), 0);
  auto slocs = secret_locations(p, lay);
  for (std::size_t i = 0; i < slocs.size(); ++i) {
    auto it = decoded.find(slocs[i]);
    if (it == decoded.end()) {
      throw decodability_error("secret coordinate " + std::to_string(i) +
                               " was not determined");
    }
    out.secret[i] = it->second;
  }
  auto klocs = key_locations(p, lay);
  for (std::size_t i = 0; i < klocs.size(); ++i) {
    auto it = decoded.find(klocs[i]);
    if (it != decoded.end()) out.keys[i] = it->second;
  }
  return out;
}

std::vector<symbol> decode_structured(const scheme_params& p,
                                      const layout& lay, const field& f,
                                      const read_plan& plan,
                                      std::span<const symbol> party_points,
                                      std::span<const symbol_reading> readings) {
  return decode_structured_trace(p, lay, f, plan, party_points, readings)
      .secret;
}

std::vector<symbol> decode_oracle(const scheme_params& p, const layout& lay,
                                  const field& f, const read_plan& plan,
                                  std::span<const symbol> party_points,
                                  std::span<const symbol_reading> readings) {
  std::vector<symbol> pts = plan_points(f, plan, party_points);
  matrix reads = index_readings(f, plan, readings);
  const std::uint64_t ka = p.secret_symbols();
  const std::uint64_t za = p.key_symbols();
  const std::size_t nreads = plan.parties.size() * plan.symbols_per_party;

  // Unknowns ordered keys first, then secrets, then the value column.
  matrix sys(nreads, za + ka + 1);
  std::vector<symbol> arow(ka), brow(za);
  std::size_t row = 0;
  for (std::size_t i = 0; i < plan.parties.size(); ++i) {
    for (std::uint64_t pos = 0; pos < plan.symbols_per_party; ++pos) {
      coefficient_row(lay, f, pts[i], pos, arow, brow);
      for (std::uint64_t j = 0; j < za; ++j) sys.at(row, j) = brow[j];
      for (std::uint64_t j = 0; j < ka; ++j) sys.at(row, za + j) = arow[j];
      sys.at(row, za + ka) = reads.at(i, pos);
      ++row;
    }
  }
  std::vector<std::size_t> pivots = reduced_row_echelon(f, sys, za + ka);
  for (std::size_t r = pivots.size(); r < nreads; ++r) {
    if (sys.at(r, za + ka) != 0) {
      throw corruption_error("readings are mutually inconsistent");
    }
  }
  std::vector<std::size_t> pivot_row(za + ka, static_cast<std::size_t>(-1));
  std::vector<bool> is_pivot(za + ka, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    pivot_row[pivots[i]] = i;
    is_pivot[pivots[i]] = true;
  }
  std::vector<symbol> secret(ka);
  for (std::uint64_t j = 0; j < ka; ++j) {
    const std::size_t col = za + j;
    const std::size_t r = pivot_row[col];
    if (r == static_cast<std::size_t>(-1)) {
      throw decodability_error("secret coordinate " + std::to_string(j) +
                               " is underdetermined");
    }
    for (std::size_t c = 0; c < za + ka; ++c) {
      if (!is_pivot[c] && sys.at(r, c) != 0) {
        throw decodability_error("secret coordinate " + std::to_string(j) +
                                 " depends on a free unknown");
      }
    }
    secret[j] = sys.at(r, za + ka);
  }
  return secret;
}

recon_map reconstruction_map(const scheme_params& p, const layout& lay,
                             const field& f, const read_plan& plan,
                             std::span<const symbol> party_points) {
  std::vector<symbol> pts = plan_points(f, plan, party_points);
  const std::uint64_t ka = p.secret_symbols();
  const std::uint64_t za = p.key_symbols();
  const std::size_t nreads = plan.parties.size() * plan.symbols_per_party;

  // [keys | secrets | identity], the identity tracking row operations.
  matrix sys(nreads, za + ka + nreads);
  std::vector<symbol> arow(ka), brow(za);
  std::size_t row = 0;
  for (std::size_t i = 0; i < plan.parties.size(); ++i) {
    for (std::uint64_t pos = 0; pos < plan.symbols_per_party; ++pos) {
      coefficient_row(lay, f, pts[i], pos, arow, brow);
      for (std::uint64_t j = 0; j < za; ++j) sys.at(row, j) = brow[j];
      for (std::uint64_t j = 0; j < ka; ++j) sys.at(row, za + j) = arow[j];
      sys.at(row, za + ka + row) = 1;
      ++row;
    }
  }
  std::vector<std::size_t> pivots = reduced_row_echelon(f, sys, za + ka);
  std::vector<std::size_t> pivot_row(za + ka, static_cast<std::size_t>(-1));
  std::vector<bool> is_pivot(za + ka, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    pivot_row[pivots[i]] = i;
    is_pivot[pivots[i]] = true;
  }

  recon_map out;
  out.secret_from_reads = matrix(ka, nreads);
  for (std::uint64_t j = 0; j < ka; ++j) {
    const std::size_t r = pivot_row[za + j];
    if (r == static_cast<std::size_t>(-1)) {
      throw decodability_error("secret coordinate " + std::to_string(j) +
                               " is underdetermined");
    }
    for (std::size_t c = 0; c < za + ka; ++c) {
      if (!is_pivot[c] && sys.at(r, c) != 0) {
        throw decodability_error("secret coordinate " + std::to_string(j) +
                                 " depends on a free unknown");
      }
    }
    for (std::size_t l = 0; l < nreads; ++l) {
      out.secret_from_reads.at(j, l) = sys.at(r, za + ka + l);
    }
  }
  const std::size_t extra = nreads - pivots.size();
  out.consistency = matrix(extra, nreads);
  for (std::size_t r = 0; r < extra; ++r) {
    for (std::size_t l = 0; l < nreads; ++l) {
      out.consistency.at(r, l) = sys.at(pivots.size() + r, za + ka + l);
    }
  }
  return out;
}

}  // namespace staircase
