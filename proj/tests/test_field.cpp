#include <random>

#include "doctest.h"
#include "staircase/field.hpp"

using namespace staircase;

TEST_SUITE_BEGIN("field");

TEST_CASE("construction and enumeration") {
  field f5(field_spec::prime(5));
  CHECK(f5.order() == 5);
  for (symbol v = 0; v < 5; ++v) CHECK_NOTHROW(f5.check(v));
  CHECK_THROWS_AS(f5.check(5), param_error);

  CHECK_THROWS_AS(field(field_spec::prime(4)), param_error);
  CHECK_THROWS_AS(field(field_spec::prime(1)), param_error);
  CHECK_THROWS_AS(field(field_spec::prime(65536)), param_error);
  CHECK_NOTHROW(field(field_spec::prime(65521)));

  field f256(field_spec::binary8());
  CHECK(f256.order() == 256);
  CHECK_THROWS_AS(field({field_kind::binary8, 0x11d}), param_error);
}

TEST_CASE("arith over GF(5)") {
  field f(field_spec::prime(5));
  CHECK(f.mul(4, 4) == 1);
  CHECK(f.pow(3, 2) == 4);
  CHECK(f.inv(2) == 3);
  CHECK(f.add(3, 4) == 2);
  CHECK(f.sub(1, 3) == 3);
  CHECK_THROWS_AS(f.inv(0), div_zero_error);
  CHECK_THROWS_AS(f.mul(5, 1), param_error);
  CHECK(f.pow(0, 0) == 1);
}

namespace {

void check_axioms_exhaustive(const field& f) {
  const std::uint32_t q = f.order();
  for (std::uint32_t a = 0; a < q; ++a) {
    const symbol sa = static_cast<symbol>(a);
    CHECK(f.add(sa, 0) == sa);
    CHECK(f.mul(sa, 1) == sa);
    CHECK(f.add(sa, f.neg(sa)) == 0);
    if (a != 0) {
      CHECK(f.mul(sa, f.inv(sa)) == 1);
      CHECK(f.pow(sa, q - 1) == 1);
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      const symbol sb = static_cast<symbol>(b);
      CHECK(f.add(sa, sb) == f.add(sb, sa));
      CHECK(f.mul(sa, sb) == f.mul(sb, sa));
      for (std::uint32_t c = 0; c < q; ++c) {
        const symbol sc = static_cast<symbol>(c);
        REQUIRE(f.add(f.add(sa, sb), sc) == f.add(sa, f.add(sb, sc)));
        REQUIRE(f.mul(f.mul(sa, sb), sc) == f.mul(sa, f.mul(sb, sc)));
        REQUIRE(f.mul(sa, f.add(sb, sc)) ==
                f.add(f.mul(sa, sb), f.mul(sa, sc)));
      }
    }
  }
}

}  // namespace

TEST_CASE("field axioms hold exhaustively over GF(5) and GF(7)") {
  check_axioms_exhaustive(field(field_spec::prime(5)));
  check_axioms_exhaustive(field(field_spec::prime(7)));
}

TEST_CASE("field axioms hold over GF(256) on random triples") {
  field f(field_spec::binary8());
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 10000; ++i) {
    const symbol a = static_cast<symbol>(rng() % 256);
    const symbol b = static_cast<symbol>(rng() % 256);
    const symbol c = static_cast<symbol>(rng() % 256);
    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
  }
  for (std::uint32_t a = 1; a < 256; ++a) {
    REQUIRE(f.mul(static_cast<symbol>(a), f.inv(static_cast<symbol>(a))) == 1);
    REQUIRE(f.pow(static_cast<symbol>(a), 255) == 1);
  }
}

TEST_CASE("byte embedding is the identity and roundtrips") {
  field f256(field_spec::binary8());
  const std::uint8_t data[] = {0x00, 0xff};
  auto syms = bytes_to_symbols(data, f256);
  REQUIRE(syms.size() == 2);
  CHECK(syms[0] == 0);
  CHECK(syms[1] == 255);

  CHECK(bytes_to_symbols({}, f256).empty());

  std::mt19937_64 rng(99);
  std::vector<std::uint8_t> blob(1024);
  for (auto& b : blob) b = static_cast<std::uint8_t>(rng());
  auto back = symbols_to_bytes(bytes_to_symbols(blob, f256), f256);
  CHECK(back == blob);

  field f5(field_spec::prime(5));
  CHECK_THROWS_AS(bytes_to_symbols(blob, f5), param_error);
  std::vector<symbol> syms5{1, 2};
  CHECK_THROWS_AS(symbols_to_bytes(syms5, f5), param_error);
}

TEST_SUITE_END();
