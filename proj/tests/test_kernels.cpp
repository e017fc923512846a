#include <random>
#include <vector>

#include "doctest.h"
#include "staircase/bulk.hpp"
#include "staircase/field.hpp"
#include "staircase/gf256_kernels.hpp"

using namespace staircase;

TEST_SUITE_BEGIN("kernels");

TEST_CASE("bit-serial product matches the field tables on all pairs") {
  field f(field_spec::binary8());
  for (std::uint32_t a = 0; a < 256; ++a) {
    for (std::uint32_t b = 0; b < 256; ++b) {
      REQUIRE(gf256::mul(static_cast<std::uint8_t>(a),
                         static_cast<std::uint8_t>(b)) ==
              f.mul(static_cast<symbol>(a), static_cast<symbol>(b)));
    }
  }
}

TEST_CASE("scalar region ops implement elementwise field arithmetic") {
  field f(field_spec::binary8());
  std::mt19937_64 rng(42);
  for (int round = 0; round < 20; ++round) {
    const std::size_t n = 1 + rng() % 200;
    std::vector<std::uint8_t> src(n), dst(n), expect(n);
    for (auto& b : src) b = static_cast<std::uint8_t>(rng());
    for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint8_t>(rng());
    const std::uint8_t c = static_cast<std::uint8_t>(rng());
    for (std::size_t i = 0; i < n; ++i) {
      expect[i] = static_cast<std::uint8_t>(f.add(dst[i], f.mul(c, src[i])));
    }
    gf256::scalar_ops().muladd(dst.data(), src.data(), c, n);
    CHECK(dst == expect);

    for (std::size_t i = 0; i < n; ++i) {
      expect[i] = static_cast<std::uint8_t>(f.mul(c, src[i]));
    }
    gf256::scalar_ops().mul(dst.data(), src.data(), c, n);
    CHECK(dst == expect);
  }
}

namespace {

void check_backend_equivalence(const gf256::region_ops& ops) {
  std::mt19937_64 rng(7);
  // Lengths straddling the vector width, plus a long run.
  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{15},
                        std::size_t{16}, std::size_t{17}, std::size_t{31},
                        std::size_t{32}, std::size_t{33}, std::size_t{63},
                        std::size_t{64}, std::size_t{65}, std::size_t{4097}}) {
    for (std::uint32_t c : {0u, 1u, 2u, 3u, 0x53u, 0xffu}) {
      std::vector<std::uint8_t> src(n), a(n), b(n);
      for (auto& v : src) v = static_cast<std::uint8_t>(rng());
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = b[i] = static_cast<std::uint8_t>(rng());
      }
      ops.muladd(a.data(), src.data(), static_cast<std::uint8_t>(c), n);
      gf256::scalar_ops().muladd(b.data(), src.data(),
                                 static_cast<std::uint8_t>(c), n);
      REQUIRE(a == b);
      ops.mul(a.data(), src.data(), static_cast<std::uint8_t>(c), n);
      gf256::scalar_ops().mul(b.data(), src.data(),
                              static_cast<std::uint8_t>(c), n);
      REQUIRE(a == b);
      ops.add(a.data(), src.data(), n);
      gf256::scalar_ops().add(b.data(), src.data(), n);
      REQUIRE(a == b);
    }
  }
}

}  // namespace

TEST_CASE("active backend is equivalent to the scalar reference") {
  INFO("backend: ", gf256::active_ops().name);
  check_backend_equivalence(gf256::active_ops());
}

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
TEST_CASE("avx2 backend is equivalent to the scalar reference") {
  if (!gf256::avx2_available()) return;
  check_backend_equivalence(gf256::avx2_ops());
}
#endif

TEST_CASE("stream map application equals per-element matrix arithmetic") {
  field f(field_spec::binary8());
  std::mt19937_64 rng(17);
  matrix m(6, 9);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m.at(r, c) = static_cast<symbol>(rng() % 256);
    }
  }
  const std::size_t len = 100;
  byte_streams in(m.cols(), std::vector<std::uint8_t>(len));
  for (auto& s : in) {
    for (auto& b : s) b = static_cast<std::uint8_t>(rng());
  }
  byte_streams out;
  gf256_apply_map(m, in, out);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t i = 0; i < len; ++i) {
      symbol expect = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        expect = f.add(expect, f.mul(m.at(r, c), in[c][i]));
      }
      REQUIRE(out[r][i] == expect);
    }
  }
  // Accumulation adds on top of the existing streams.
  byte_streams out2 = out;
  gf256_apply_map(m, in, out2, true);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t i = 0; i < len; ++i) {
      REQUIRE(out2[r][i] == static_cast<std::uint8_t>(
                                f.add(out[r][i], out[r][i])));
    }
  }
}

TEST_SUITE_END();
