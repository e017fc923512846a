#pragma once

// GF(256) region kernels for the bulk encode/decode paths. Buffers hold
// one byte per symbol of the x^8 + x^4 + x^3 + x + 1 field.
//
// Layering and contract:
//  - The scalar implementation (log/antilog lookups) defines the
//    semantics and always exists.
//  - SIMD variants (AVX2 on x86-64, NEON on aarch64) implement the same
//    contract via 4-bit split multiply tables and are selected at
//    runtime from CPU capabilities; tests enforce equivalence with the
//    scalar reference.
//  - All entry points accept unaligned buffers and arbitrary lengths;
//    vector loops process whole vectors and a scalar tail finishes the
//    remainder. dst and src must not overlap.

#include <cstddef>
#include <cstdint>

namespace staircase::gf256 {

// Bit-serial product; the reference all tables are derived from.
std::uint8_t mul(std::uint8_t a, std::uint8_t b);

struct region_ops {
  // dst[i] ^= c * src[i]
  void (*muladd)(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c,
                 std::size_t n);
  // dst[i] = c * src[i]
  void (*mul)(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c,
              std::size_t n);
  // dst[i] ^= src[i]
  void (*add)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);
  const char* name;
};

const region_ops& scalar_ops();

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
bool avx2_available();
const region_ops& avx2_ops();
#endif

#if defined(__aarch64__)
const region_ops& neon_ops();
#endif

// Best backend for this machine, resolved once on first use.
const region_ops& active_ops();

inline void region_muladd(std::uint8_t* dst, const std::uint8_t* src,
                          std::uint8_t c, std::size_t n) {
  active_ops().muladd(dst, src, c, n);
}

inline void region_mul(std::uint8_t* dst, const std::uint8_t* src,
                       std::uint8_t c, std::size_t n) {
  active_ops().mul(dst, src, c, n);
}

inline void region_add(std::uint8_t* dst, const std::uint8_t* src,
                       std::size_t n) {
  active_ops().add(dst, src, n);
}

}  // namespace staircase::gf256
