#include <numeric>

#include "doctest.h"
#include "staircase/secrecy.hpp"
#include "staircase/tcss.hpp"

using namespace staircase;

TEST_SUITE_BEGIN("tcss");

TEST_CASE("truncation sizes and storage costs") {
  scheme_params u = params_universal(4, 1, 1);

  threshold_state t3 = threshold_state_for(u, 3);
  CHECK(t3.kept_symbols == 3);
  CHECK(storage_cost(u, 3) == rational::of(1, 2));

  threshold_state t4 = threshold_state_for(u, 4);
  CHECK(t4.kept_symbols == 2);
  CHECK(storage_cost(u, 4) == rational::of(1, 3));

  CHECK(storage_cost(u, 2) == rational::of(1));
  CHECK_THROWS_AS(storage_cost(u, 1), param_error);
  CHECK_THROWS_AS(storage_cost(u, 5), param_error);
  CHECK_THROWS_AS(threshold_state_for(u, 5), param_error);
  CHECK_THROWS_AS(threshold_state_for(u, 1), param_error);
}

TEST_CASE("rethreshold keeps the planned prefix") {
  field f(field_spec::prime(5));
  scheme_params u = params_universal(4, 1, 1);
  layout lay = build_layout(u);
  seeded_random_source rng(9);
  auto secret = draw_symbols(u.secret_symbols(), f, rng);
  auto keys = draw_keys(u, f, rng);
  auto shares = encode(u, lay, f, secret, keys);

  share w3 = rethreshold(u, shares[0], 3);
  CHECK(w3.current_threshold == 3);
  REQUIRE(w3.symbols.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(w3.symbols[i] == shares[0].symbols[i]);

  share w4 = rethreshold(u, shares[0], 4);
  REQUIRE(w4.symbols.size() == 2);

  // Raising in two hops equals raising in one.
  share w34 = rethreshold(u, w3, 4);
  CHECK(w34.symbols == w4.symbols);
  CHECK(w34.current_threshold == 4);

  // The same target is the identity; lowering is refused.
  share same = rethreshold(u, w3, 3);
  CHECK(same.symbols == w3.symbols);
  CHECK_THROWS_AS(rethreshold(u, w3, 2), param_error);

  // Fixed-d schemes only support t' = d.
  field f7(field_spec::prime(7));
  scheme_params fx = params_fixed(5, 1, 1, 4);
  layout flay = build_layout(fx);
  auto fsecret = draw_symbols(fx.secret_symbols(), f7, rng);
  auto fkeys = draw_keys(fx, f7, rng);
  auto fshares = encode(fx, flay, f7, fsecret, fkeys);
  CHECK_THROWS_AS(rethreshold(fx, fshares[0], 3), param_error);
  CHECK_NOTHROW(rethreshold(fx, fshares[0], 4));
}

TEST_CASE("rethreshold truncates every block of a multi-block share") {
  field f(field_spec::prime(5));
  scheme_params u = params_universal(4, 1, 1);
  layout lay = build_layout(u);
  seeded_random_source rng(77);
  auto s1 = draw_symbols(u.secret_symbols(), f, rng);
  auto k1 = draw_keys(u, f, rng);
  auto s2 = draw_symbols(u.secret_symbols(), f, rng);
  auto k2 = draw_keys(u, f, rng);
  auto b1 = encode(u, lay, f, s1, k1);
  auto b2 = encode(u, lay, f, s2, k2);

  share two_blocks = b1[2];
  two_blocks.symbols.insert(two_blocks.symbols.end(),
                            b2[2].symbols.begin(), b2[2].symbols.end());
  share cut = rethreshold(u, two_blocks, 4);
  REQUIRE(cut.symbols.size() == 4);
  CHECK(cut.symbols[0] == b1[2].symbols[0]);
  CHECK(cut.symbols[1] == b1[2].symbols[1]);
  CHECK(cut.symbols[2] == b2[2].symbols[0]);
  CHECK(cut.symbols[3] == b2[2].symbols[1]);

  share ragged = two_blocks;
  ragged.symbols.pop_back();
  CHECK_THROWS_AS(rethreshold(u, ragged, 3), param_error);
}

TEST_CASE("truncated share equals the prefix a t'-reader fetches") {
  field f(field_spec::prime(7));
  scheme_params u = params_universal(5, 2, 1);
  layout lay = build_layout(u);
  seeded_random_source rng(11);
  auto secret = draw_symbols(u.secret_symbols(), f, rng);
  auto keys = draw_keys(u, f, rng);
  auto shares = encode(u, lay, f, secret, keys);

  for (std::uint32_t tp : {4u, 5u}) {
    std::vector<std::uint32_t> contacted(tp);
    std::iota(contacted.begin(), contacted.end(), 0);
    read_plan plan = access_plan(u, contacted, u.t);
    REQUIRE(plan.d == tp);
    for (std::uint32_t party : plan.parties) {
      share w = rethreshold(u, shares[party], tp);
      REQUIRE(w.symbols.size() == plan.symbols_per_party);
      for (std::uint64_t i = 0; i < plan.symbols_per_party; ++i) {
        REQUIRE(w.symbols[i] == shares[party].symbols[i]);
      }
    }
  }
}

TEST_CASE("post-truncation overheads still meet the bound") {
  scheme_params u = params_universal(4, 1, 1);
  // After raising to t' = 3, contacting all four parties reads 2
  // symbols per party for a 1/3 unit overhead.
  std::vector<std::uint32_t> all{0, 1, 2, 3};
  read_plan plan = access_plan(u, all, 3);
  CHECK(plan.d == 4);
  CHECK(plan.symbols_per_party == 2);
  CHECK(plan.co == rational::of(1, 3));

  // Two parties are no longer enough.
  std::vector<std::uint32_t> two{0, 1};
  CHECK_THROWS_AS(access_plan(u, two, 3), insufficient_parties_error);
}

TEST_CASE("verify_tcss passes the worked and fresh parameter sets") {
  field f5(field_spec::prime(5));
  scheme_params u = params_universal(4, 1, 1);
  CHECK(verify_tcss(u, 3, f5));
  CHECK(verify_tcss(u, 4, f5));

  field f7(field_spec::prime(7));
  scheme_params u52 = params_universal(5, 2, 1);
  CHECK(verify_tcss(u52, 4, f7));

  scheme_params fx = params_fixed(5, 1, 1, 4);
  CHECK(verify_tcss(fx, 4, f7));
}

TEST_SUITE_END();
