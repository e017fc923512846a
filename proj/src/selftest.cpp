#include "staircase/selftest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "staircase/codec.hpp"
#include "staircase/gf256_kernels.hpp"
#include "staircase/secrecy.hpp"
#include "staircase/sharefile.hpp"
#include "staircase/tcss.hpp"

namespace staircase {

namespace {

bool field_axioms(const field& f, std::uint64_t triple_samples) {
  const std::uint32_t q = f.order();
  std::mt19937_64 rng(7);
  auto draw = [&]() { return static_cast<symbol>(rng() % q); };
  auto triple_ok = [&](symbol a, symbol b, symbol c) {
    if (f.add(a, b) != f.add(b, a)) return false;
    if (f.mul(a, b) != f.mul(b, a)) return false;
    if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) return false;
    if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return false;
    if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return false;
    if (f.add(a, 0) != a || f.mul(a, 1) != a) return false;
    if (f.add(a, f.neg(a)) != 0) return false;
    if (a != 0 && f.mul(a, f.inv(a)) != 1) return false;
    if (a != 0 && f.pow(a, q - 1) != 1) return false;
    return true;
  };
  if (triple_samples == 0) {
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        for (std::uint32_t c = 0; c < q; ++c) {
          if (!triple_ok(static_cast<symbol>(a), static_cast<symbol>(b),
                         static_cast<symbol>(c))) {
            return false;
          }
        }
      }
    }
    return true;
  }
  for (std::uint64_t i = 0; i < triple_samples; ++i) {
    if (!triple_ok(draw(), draw(), draw())) return false;
  }
  return true;
}

bool kernels_match_field() {
  const field f(field_spec::binary8());
  for (std::uint32_t a = 0; a < 256; ++a) {
    for (std::uint32_t b = 0; b < 256; ++b) {
      if (f.mul(static_cast<symbol>(a), static_cast<symbol>(b)) !=
          gf256::mul(static_cast<std::uint8_t>(a),
                     static_cast<std::uint8_t>(b))) {
        return false;
      }
    }
  }
  // Active backend against the scalar reference on awkward lengths.
  std::mt19937_64 rng(11);
  for (std::size_t len : {std::size_t{1}, std::size_t{31}, std::size_t{32},
                          std::size_t{33}, std::size_t{1000}}) {
    std::vector<std::uint8_t> src(len), d0(len), d1(len);
    for (auto& b : src) b = static_cast<std::uint8_t>(rng());
    for (std::size_t i = 0; i < len; ++i) d0[i] = d1[i] = static_cast<std::uint8_t>(rng());
    const std::uint8_t c = static_cast<std::uint8_t>(rng() | 2);
    gf256::scalar_ops().muladd(d0.data(), src.data(), c, len);
    gf256::active_ops().muladd(d1.data(), src.data(), c, len);
    if (d0 != d1) return false;
    gf256::scalar_ops().mul(d0.data(), src.data(), c, len);
    gf256::active_ops().mul(d1.data(), src.data(), c, len);
    if (d0 != d1) return false;
  }
  return true;
}

bool vandermonde_windows(const field& f, std::uint32_t max_n) {
  const std::uint32_t n = std::min(max_n, f.order() - 1);
  std::vector<symbol> points = default_points(f, n);
  matrix v = vandermonde(f, points, n);
  // Every row subset against every contiguous column window of the same
  // size must be invertible.
  for (std::uint32_t m = 1; m <= n; ++m) {
    std::vector<std::uint32_t> rows(m);
    std::iota(rows.begin(), rows.end(), 0);
    auto advance = [&]() {
      std::size_t i = rows.size();
      while (i-- > 0) {
        if (rows[i] + 1 <= n - (m - i)) {
          ++rows[i];
          for (std::size_t j = i + 1; j < m; ++j) rows[j] = rows[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    do {
      for (std::uint32_t c0 = 0; c0 + m <= n; ++c0) {
        matrix sub(m, m);
        for (std::uint32_t i = 0; i < m; ++i) {
          for (std::uint32_t j = 0; j < m; ++j) {
            sub.at(i, j) = v.at(rows[i], c0 + j);
          }
        }
        if (rank(f, sub) != m) return false;
      }
    } while (advance());
  }
  return true;
}

bool golden_fixed_vectors() {
  const field f(field_spec::prime(5));
  scheme_params p = params_fixed(4, 1, 1, 3);
  layout lay = build_layout(p);
  coeff_maps maps = coefficient_maps(p, lay, f);
  // Symbol 0 of party with point x reads s1 + x s2 + x^2 r1; symbol 1
  // reads r1 + x r2.
  for (std::uint32_t i = 0; i < 4; ++i) {
    const symbol x = static_cast<symbol>(i + 1);
    auto a0 = maps.a.row(std::size_t{i} * 2);
    auto b0 = maps.b.row(std::size_t{i} * 2);
    if (a0[0] != 1 || a0[1] != x || b0[0] != f.mul(x, x) || b0[1] != 0) {
      return false;
    }
    auto a1 = maps.a.row(std::size_t{i} * 2 + 1);
    auto b1 = maps.b.row(std::size_t{i} * 2 + 1);
    if (a1[0] != 0 || a1[1] != 0 || b1[0] != 1 || b1[1] != x) return false;
  }
  return true;
}

bool golden_universal_vectors() {
  const field f(field_spec::prime(5));
  scheme_params p = params_universal(4, 1, 1);
  if (p.alpha != 6) return false;
  layout lay = build_layout(p);
  // Column provenance of M: (s1 s2 s3 r1 | s4 s5 s6 r2 | r1 r2 r3 0 |
  // s3 r4 0 0 | s6 r5 0 0 | r3 r6 0 0), duplicates resolved.
  auto resolved = [&](std::uint32_t r, std::uint64_t c) {
    const cell* cl = &lay.at(r, c);
    if (cl->k == cell::kind::dup) cl = &lay.at(cl->src_row, cl->src_col);
    return *cl;
  };
  struct want {
    std::uint64_t c;
    std::uint64_t idx;
    std::uint32_t r;
    cell::kind k;
  };
  const want wants[] = {
      {0, 0, 0, cell::kind::secret}, {0, 1, 1, cell::kind::secret},
      {0, 2, 2, cell::kind::secret}, {0, 0, 3, cell::kind::key},
      {1, 3, 0, cell::kind::secret}, {1, 4, 1, cell::kind::secret},
      {1, 5, 2, cell::kind::secret}, {1, 1, 3, cell::kind::key},
      {2, 0, 0, cell::kind::key},    {2, 1, 1, cell::kind::key},
      {2, 2, 2, cell::kind::key},    {2, 0, 3, cell::kind::zero},
      {3, 2, 0, cell::kind::secret}, {3, 3, 1, cell::kind::key},
      {4, 5, 0, cell::kind::secret}, {4, 4, 1, cell::kind::key},
      {5, 2, 0, cell::kind::key},    {5, 5, 1, cell::kind::key},
  };
  for (const want& w : wants) {
    cell got = resolved(w.r, w.c);
    if (got.k != w.k) return false;
    if (w.k != cell::kind::zero && got.index != w.idx) return false;
  }
  // Share symbols: position 3 of the party at point x is s3 + x r4.
  coeff_maps maps = coefficient_maps(p, lay, f);
  for (std::uint32_t i = 0; i < 4; ++i) {
    const symbol x = static_cast<symbol>(i + 1);
    auto a = maps.a.row(std::size_t{i} * 6 + 3);
    auto b = maps.b.row(std::size_t{i} * 6 + 3);
    for (std::uint64_t j = 0; j < 6; ++j) {
      if (a[j] != (j == 2 ? 1 : 0)) return false;
      if (b[j] != (j == 3 ? x : 0)) return false;
    }
  }
  return true;
}

bool roundtrips(std::uint32_t max_n) {
  const field f(field_spec::prime(11));
  std::mt19937_64 rng(23);
  seeded_random_source key_src(29);
  auto check_scheme = [&](const scheme_params& p) {
    layout lay = build_layout(p);
    std::vector<symbol> points = default_points(f, p.n);
    std::vector<symbol> secret = draw_symbols(p.secret_symbols(), f, key_src);
    std::vector<symbol> keys = draw_keys(p, f, key_src);
    std::vector<share> shares = encode(p, lay, f, secret, keys, points);
    for (std::uint32_t d : p.d_list) {
      // One random d-subset per supported size.
      std::vector<std::uint32_t> all(p.n);
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<std::uint32_t> contacted(all.begin(), all.begin() + d);
      read_plan plan = access_plan(p, contacted, p.t);
      if (plan.d != d) return false;
      std::vector<symbol_reading> readings;
      for (std::uint32_t party : plan.parties) {
        for (std::uint64_t pos = 0; pos < plan.symbols_per_party; ++pos) {
          readings.push_back({party, pos, shares[party].symbols[pos]});
        }
      }
      if (decode_structured(p, lay, f, plan, points, readings) != secret) {
        return false;
      }
      if (decode_oracle(p, lay, f, plan, points, readings) != secret) {
        return false;
      }
    }
    return true;
  };
  for (std::uint32_t n = 2; n <= std::min(max_n, f.order() - 1); ++n) {
    for (std::uint32_t z = 1; z < n; ++z) {
      for (std::uint32_t k = 1; k + z <= n; ++k) {
        if (!check_scheme(params_universal(n, k, z))) return false;
        for (std::uint32_t d = k + z; d <= n; ++d) {
          if (!check_scheme(params_fixed(n, k, z, d))) return false;
          if (!check_scheme(params_delta(n, k, z, {d}))) return false;
        }
      }
    }
  }
  return true;
}

bool secrecy_sweep(std::uint32_t max_n) {
  const field f(field_spec::prime(11));
  const std::uint32_t top = std::min(max_n, f.order() - 1);
  for (std::uint32_t n = 2; n <= top; ++n) {
    for (std::uint32_t z = 1; z < n; ++z) {
      for (std::uint32_t k = 1; k + z <= n; ++k) {
        scheme_params u = params_universal(n, k, z);
        if (!check_secrecy_rank(u, build_layout(u), f).pass) return false;
        for (std::uint32_t d = k + z; d <= n; ++d) {
          scheme_params fx = params_fixed(n, k, z, d);
          if (!check_secrecy_rank(fx, build_layout(fx), f).pass) return false;
        }
      }
    }
  }
  return true;
}

bool wire_roundtrip() {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    share_file_header h;
    h.kind = static_cast<scheme_kind>(rng() % 3);
    h.fkind = static_cast<field_kind>(rng() % 2);
    h.modulus = static_cast<std::uint16_t>(rng());
    h.n = static_cast<std::uint16_t>(rng());
    h.k = static_cast<std::uint16_t>(rng());
    h.z = static_cast<std::uint16_t>(rng());
    h.d = static_cast<std::uint16_t>(rng());
    if (h.kind == scheme_kind::delta) {
      const std::size_t cnt = rng() % 5;
      for (std::size_t j = 0; j < cnt; ++j) {
        h.delta.push_back(static_cast<std::uint16_t>(rng()));
      }
    }
    h.threshold = static_cast<std::uint16_t>(rng());
    h.index = static_cast<std::uint16_t>(rng());
    h.eval_point = static_cast<std::uint16_t>(rng());
    h.secret_bytes = rng();
    h.blocks = static_cast<std::uint32_t>(rng());
    std::vector<std::uint8_t> bytes = encode_header(h);
    std::size_t hs = 0;
    share_file_header back = parse_header(bytes, hs);
    if (!(back == h) || hs != bytes.size()) return false;
  }
  return true;
}

bool fault_detected() {
  const field f(field_spec::prime(5));
  scheme_params p = params_fixed(4, 1, 1, 3);
  layout lay = build_layout(p);
  // Erase the fresh keys of the right column block; the duplicated key
  // column is then exposed and the verifier must notice.
  for (std::uint32_t r = 0; r < lay.rows; ++r) {
    for (std::uint64_t c = p.k; c < lay.cols; ++c) {
      if (lay.at(r, c).k == cell::kind::key) lay.at(r, c) = cell{};
    }
  }
  return !check_secrecy_rank(p, lay, f).pass;
}

}  // namespace

int run_selftest(const selftest_options& opt, std::ostream& out) {
  int failures = 0;
  auto run = [&](const char* name, const std::function<bool()>& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const error& e) {
      out << "FAIL " << name << " (" << e.what() << ")\n";
      ++failures;
      return;
    }
    out << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  run("field axioms GF(5), exhaustive",
      [] { return field_axioms(field(field_spec::prime(5)), 0); });
  run("field axioms GF(7), exhaustive",
      [] { return field_axioms(field(field_spec::prime(7)), 0); });
  run("field axioms GF(256), 10^4 random triples",
      [] { return field_axioms(field(field_spec::binary8()), 10'000); });
  run("gf256 kernels match field arithmetic", kernels_match_field);
  out << "     gf256 backend: " << gf256::active_ops().name << "\n";
  run("vandermonde consecutive-column windows GF(7)", [&] {
    return vandermonde_windows(field(field_spec::prime(7)), opt.max_n);
  });
  run("vandermonde consecutive-column windows GF(11)", [&] {
    return vandermonde_windows(field(field_spec::prime(11)), opt.max_n);
  });
  run("golden share vectors, fixed (4,1,1,3)/GF(5)", golden_fixed_vectors);
  run("golden share vectors, universal (4,1,1)/GF(5)",
      golden_universal_vectors);
  run("encode/decode roundtrips, all kinds, GF(11)",
      [&] { return roundtrips(opt.max_n); });
  run("secrecy rank criterion sweep, GF(11)",
      [&] { return secrecy_sweep(opt.max_n); });
  run("share header wire roundtrip", wire_roundtrip);
  if (opt.inject_fault) {
    run("injected layout fault is detected", fault_detected);
  }
  return failures;
}

}  // namespace staircase
