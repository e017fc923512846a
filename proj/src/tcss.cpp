#include "staircase/tcss.hpp"

#include <numeric>
#include <string>

#include "staircase/secrecy.hpp"

namespace staircase {

threshold_state threshold_state_for(const scheme_params& p,
                                    std::uint32_t t_prime) {
  if (t_prime < p.t) {
    throw param_error("threshold cannot be lowered below t=" +
                      std::to_string(p.t));
  }
  if (t_prime > p.n) {
    throw param_error("threshold cannot exceed the party count");
  }
  if (p.kind == scheme_kind::fixed && t_prime != p.t &&
      t_prime != p.d_fixed) {
    throw param_error("a fixed-d scheme can only change its threshold to d=" +
                      std::to_string(p.d_fixed));
  }
  if (!p.supports_d(t_prime)) {
    throw param_error("t'=" + std::to_string(t_prime) +
                      " is not a supported reconstruction size");
  }
  threshold_state ts;
  ts.original_t = p.t;
  ts.current = t_prime;
  ts.kept_symbols = p.read_len(t_prime);
  return ts;
}

share rethreshold(const scheme_params& p, const share& w,
                  std::uint32_t t_prime) {
  if (t_prime < w.current_threshold) {
    throw param_error("lowering the threshold is refused");
  }
  threshold_state ts = threshold_state_for(p, t_prime);
  const std::uint64_t old_kept = p.read_len(w.current_threshold);
  if (old_kept == 0 || w.symbols.size() % old_kept != 0) {
    throw param_error("share length does not match its threshold");
  }
  const std::uint64_t blocks = w.symbols.size() / old_kept;
  share out = w;
  out.current_threshold = t_prime;
  out.symbols.clear();
  out.symbols.reserve(blocks * ts.kept_symbols);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    for (std::uint64_t i = 0; i < ts.kept_symbols; ++i) {
      out.symbols.push_back(w.symbols[b * old_kept + i]);
    }
  }
  return out;
}

rational storage_cost(const scheme_params& p, std::uint32_t t_prime) {
  if (t_prime <= p.z) {
    throw param_error("threshold must exceed z");
  }
  if (t_prime < p.t || t_prime > p.n) {
    throw param_error("threshold outside [t, n]");
  }
  return rational(bigint(p.k), bigint(t_prime - p.z));
}

bool verify_tcss(const scheme_params& p, std::uint32_t t_prime,
                 const field& f) {
  threshold_state ts = threshold_state_for(p, t_prime);
  layout lay = build_layout(p);
  std::vector<symbol> points = default_points(f, p.n);

  // Deterministic sample material.
  seeded_random_source rng(0x5ca1ab1e);
  std::vector<symbol> secret = draw_symbols(p.secret_symbols(), f, rng);
  std::vector<symbol> keys = draw_keys(p, f, rng);

  std::vector<share> shares = encode(p, lay, f, secret, keys, points);
  std::vector<share> truncated;
  truncated.reserve(shares.size());
  for (const share& w : shares) truncated.push_back(rethreshold(p, w, t_prime));

  // (b) truncated size matches the minimum storage cost.
  for (const share& w : truncated) {
    if (w.symbols.size() != ts.kept_symbols) return false;
  }
  if (rational(bigint(ts.kept_symbols), bigint(p.alpha)) !=
      storage_cost(p, t_prime)) {
    return false;
  }

  // (a) every t'-subset of truncated shares decodes both ways.
  std::vector<std::uint32_t> subset(t_prime);
  std::iota(subset.begin(), subset.end(), 0);
  auto advance = [&]() {
    std::size_t i = subset.size();
    while (i-- > 0) {
      if (subset[i] + 1 <= p.n - (subset.size() - i)) {
        ++subset[i];
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
          subset[j] = subset[j - 1] + 1;
        }
        return true;
      }
    }
    return false;
  };
  do {
    read_plan plan = access_plan(p, subset, t_prime);
    std::vector<symbol_reading> readings;
    for (std::uint32_t party : plan.parties) {
      for (std::uint64_t pos = 0; pos < plan.symbols_per_party; ++pos) {
        readings.push_back({party, pos, truncated[party].symbols[pos]});
      }
    }
    if (decode_structured(p, lay, f, plan, points, readings) != secret) {
      return false;
    }
    if (decode_oracle(p, lay, f, plan, points, readings) != secret) {
      return false;
    }
  } while (advance());

  // (c) secrecy still holds on the truncated coefficient maps.
  if (!check_secrecy_rank(p, lay, f, points, ts.kept_symbols).pass) {
    return false;
  }

  // (d) residual overheads for every supported d >= t'.
  for (std::uint32_t d : p.d_list) {
    if (d < t_prime) continue;
    if (p.read_len(d) > ts.kept_symbols) return false;
    std::vector<std::uint32_t> contacted(d);
    std::iota(contacted.begin(), contacted.end(), 0);
    read_plan plan = access_plan(p, contacted, t_prime);
    if (plan.d != d) return false;
    rational units_read(bigint(std::uint64_t{plan.d} * plan.symbols_per_party),
                        bigint(p.alpha));
    rational expect = rational(bigint(p.k)) +
                      rational(bigint(std::uint64_t{p.k} * p.z), bigint(d - p.z));
    if (units_read != expect || plan.co != overheads(p, d).first) return false;
  }
  return true;
}

}  // namespace staircase
