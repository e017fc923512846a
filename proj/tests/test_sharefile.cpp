#include <random>

#include "doctest.h"
#include "staircase/sharefile.hpp"

using namespace staircase;

TEST_SUITE_BEGIN("sharefile");

TEST_CASE("header bytes are pinned") {
  share_file_header h;
  h.kind = scheme_kind::universal;
  h.fkind = field_kind::binary8;
  h.modulus = 0x011b;
  h.n = 4;
  h.k = 1;
  h.z = 1;
  h.d = 0;
  h.threshold = 2;
  h.index = 3;
  h.eval_point = 4;
  h.secret_bytes = 0x0102030405060708ull;
  h.blocks = 0x0a0b0c0d;
  const std::uint8_t want[] = {
      'S', 'C', 'S', 'S',             // magic
      1,                              // version
      1,                              // universal
      1,                              // binary8
      0x01, 0x1b,                     // modulus
      0x00, 0x04, 0x00, 0x01, 0x00, 0x01,  // n, k, z
      0x00, 0x00,                     // d
      0x00, 0x00,                     // delta count
      0x00, 0x02,                     // threshold
      0x00, 0x03,                     // index
      0x00, 0x04,                     // eval point
      0x01, 0x02, 0x03, 0x04, 0x05, 0x06, 0x07, 0x08,  // secret bytes
      0x0a, 0x0b, 0x0c, 0x0d,         // blocks
  };
  auto bytes = encode_header(h);
  REQUIRE(bytes.size() == sizeof want);
  for (std::size_t i = 0; i < sizeof want; ++i) REQUIRE(bytes[i] == want[i]);
}

TEST_CASE("random headers roundtrip byte-exactly") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    share_file_header h;
    h.kind = static_cast<scheme_kind>(rng() % 3);
    h.fkind = static_cast<field_kind>(rng() % 2);
    h.modulus = static_cast<std::uint16_t>(rng());
    h.n = static_cast<std::uint16_t>(rng());
    h.k = static_cast<std::uint16_t>(rng());
    h.z = static_cast<std::uint16_t>(rng());
    h.d = static_cast<std::uint16_t>(rng());
    if (h.kind == scheme_kind::delta) {
      const std::size_t cnt = rng() % 6;
      for (std::size_t j = 0; j < cnt; ++j) {
        h.delta.push_back(static_cast<std::uint16_t>(rng()));
      }
    }
    h.threshold = static_cast<std::uint16_t>(rng());
    h.index = static_cast<std::uint16_t>(rng());
    h.eval_point = static_cast<std::uint16_t>(rng());
    h.secret_bytes = rng();
    h.blocks = static_cast<std::uint32_t>(rng());

    auto bytes = encode_header(h);
    std::size_t hs = 0;
    share_file_header back = parse_header(bytes, hs);
    REQUIRE(back == h);
    REQUIRE(hs == bytes.size());
  }
}

TEST_CASE("malformed headers are rejected") {
  share_file_header h;
  h.n = 4;
  h.k = 1;
  h.z = 1;
  h.threshold = 2;
  auto bytes = encode_header(h);
  std::size_t hs = 0;

  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(parse_header(bad_magic, hs), format_error);

  auto bad_version = bytes;
  bad_version[4] = 9;
  CHECK_THROWS_AS(parse_header(bad_version, hs), format_error);

  auto bad_kind = bytes;
  bad_kind[5] = 7;
  CHECK_THROWS_AS(parse_header(bad_kind, hs), format_error);

  for (std::size_t cut = 0; cut < bytes.size(); ++cut) {
    std::vector<std::uint8_t> trunc(bytes.begin(), bytes.begin() + cut);
    CHECK_THROWS_AS(parse_header(trunc, hs), format_error);
  }
}

TEST_CASE("mutated header bytes parse cleanly or raise format errors") {
  share_file_header h;
  h.kind = scheme_kind::delta;
  h.n = 6;
  h.k = 1;
  h.z = 1;
  h.delta = {5, 2};
  h.threshold = 2;
  h.secret_bytes = 1234;
  h.blocks = 7;
  const auto base = encode_header(h);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 2000; ++i) {
    auto bytes = base;
    const int flips = 1 + rng() % 4;
    for (int j = 0; j < flips; ++j) {
      bytes[rng() % bytes.size()] ^= static_cast<std::uint8_t>(1 + rng() % 255);
    }
    std::size_t hs = 0;
    try {
      share_file_header got = parse_header(bytes, hs);
      params_from_header(got);
      spec_from_header(got);
    } catch (const format_error&) {
      // fine: detected as malformed
    }
  }
}

TEST_CASE("headers rebuild scheme parameters and field specs") {
  share_file_header h;
  h.kind = scheme_kind::delta;
  h.fkind = field_kind::prime;
  h.modulus = 7;
  h.n = 6;
  h.k = 1;
  h.z = 1;
  h.delta = {5, 2};
  h.threshold = 2;
  scheme_params p = params_from_header(h);
  CHECK(p.kind == scheme_kind::delta);
  CHECK(p.alpha == 4);
  CHECK(p.d_list == std::vector<std::uint32_t>{5, 2});
  field f(spec_from_header(h));
  CHECK(f.order() == 7);
  CHECK(symbol_width(h.fkind) == 2);
  CHECK(symbol_width(field_kind::binary8) == 1);

  share_file_header bad = h;
  bad.delta = {};
  CHECK_THROWS_AS(params_from_header(bad), format_error);
  bad = h;
  bad.z = 9;
  CHECK_THROWS_AS(params_from_header(bad), format_error);
  bad = h;
  bad.fkind = field_kind::binary8;
  bad.modulus = 5;
  CHECK_THROWS_AS(spec_from_header(bad), format_error);
  bad = h;
  bad.fkind = field_kind::prime;
  bad.modulus = 9;  // not prime
  CHECK_THROWS_AS(spec_from_header(bad), format_error);
}

TEST_SUITE_END();
