#include "staircase/gf256_kernels.hpp"

#include <array>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
#include <immintrin.h>
#define STAIRCASE_X86 1
#endif

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace staircase::gf256 {

std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
  std::uint32_t acc = 0;
  for (int i = 0; i < 8; ++i) {
    if (b & (1u << i)) acc ^= std::uint32_t{a} << i;
  }
  for (int bit = 15; bit >= 8; --bit) {
    if (acc & (1u << bit)) acc ^= 0x11bu << (bit - 8);
  }
  return static_cast<std::uint8_t>(acc);
}

namespace {

struct tables {
  // log/antilog pair for the scalar path.
  std::array<std::uint8_t, 256> log;
  std::array<std::uint8_t, 510> exp;
  // Split-nibble products for the SIMD paths: lo[c][x] = c * x and
  // hi[c][x] = c * (x << 4), for x in [0, 16).
  alignas(16) std::uint8_t lo[256][16];
  alignas(16) std::uint8_t hi[256][16];

  tables() {
    std::uint8_t v = 1;
    for (std::uint32_t i = 0; i < 255; ++i) {
      exp[i] = v;
      exp[i + 255] = v;
      log[v] = static_cast<std::uint8_t>(i);
      v = mul(v, 3);
    }
    for (std::uint32_t c = 0; c < 256; ++c) {
      for (std::uint32_t x = 0; x < 16; ++x) {
        lo[c][x] = mul(static_cast<std::uint8_t>(c),
                       static_cast<std::uint8_t>(x));
        hi[c][x] = mul(static_cast<std::uint8_t>(c),
                       static_cast<std::uint8_t>(x << 4));
      }
    }
  }
};

const tables& tabs() {
  static const tables t;
  return t;
}

void muladd_scalar(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c,
                   std::size_t n) {
  if (c == 0) return;
  const tables& t = tabs();
  if (c == 1) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
    return;
  }
  const std::size_t lc = t.log[c];
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t s = src[i];
    if (s != 0) dst[i] ^= t.exp[lc + t.log[s]];
  }
}

void mul_scalar(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c,
                std::size_t n) {
  const tables& t = tabs();
  if (c == 0) {
    std::memset(dst, 0, n);
    return;
  }
  if (c == 1) {
    std::memcpy(dst, src, n);
    return;
  }
  const std::size_t lc = t.log[c];
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t s = src[i];
    dst[i] = s ? t.exp[lc + t.log[s]] : 0;
  }
}

void add_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

#if STAIRCASE_X86

__attribute__((target("avx2"))) inline __m256i mul_bytes_avx2(
    __m256i s, __m256i lo, __m256i hi, __m256i mask) {
  __m256i l = _mm256_shuffle_epi8(lo, _mm256_and_si256(s, mask));
  __m256i h = _mm256_shuffle_epi8(
      hi, _mm256_and_si256(_mm256_srli_epi16(s, 4), mask));
  return _mm256_xor_si256(l, h);
}

__attribute__((target("avx2"))) void muladd_avx2(std::uint8_t* dst,
                                                 const std::uint8_t* src,
                                                 std::uint8_t c,
                                                 std::size_t n) {
  if (c == 0) return;
  const tables& t = tabs();
  const __m256i lo = _mm256_broadcastsi128_si256(
      _mm_load_si128(reinterpret_cast<const __m128i*>(t.lo[c])));
  const __m256i hi = _mm256_broadcastsi128_si256(
      _mm_load_si128(reinterpret_cast<const __m128i*>(t.hi[c])));
  const __m256i mask = _mm256_set1_epi8(0x0f);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    d = _mm256_xor_si256(d, mul_bytes_avx2(s, lo, hi, mask));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
  }
  muladd_scalar(dst + i, src + i, c, n - i);
}

__attribute__((target("avx2"))) void mul_avx2(std::uint8_t* dst,
                                              const std::uint8_t* src,
                                              std::uint8_t c, std::size_t n) {
  if (c == 0) {
    std::memset(dst, 0, n);
    return;
  }
  const tables& t = tabs();
  const __m256i lo = _mm256_broadcastsi128_si256(
      _mm_load_si128(reinterpret_cast<const __m128i*>(t.lo[c])));
  const __m256i hi = _mm256_broadcastsi128_si256(
      _mm_load_si128(reinterpret_cast<const __m128i*>(t.hi[c])));
  const __m256i mask = _mm256_set1_epi8(0x0f);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        mul_bytes_avx2(s, lo, hi, mask));
  }
  mul_scalar(dst + i, src + i, c, n - i);
}

__attribute__((target("avx2"))) void add_avx2(std::uint8_t* dst,
                                              const std::uint8_t* src,
                                              std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_xor_si256(d, s));
  }
  add_scalar(dst + i, src + i, n - i);
}

#endif  // STAIRCASE_X86

#if defined(__aarch64__)

inline uint8x16_t mul_bytes_neon(uint8x16_t s, uint8x16_t lo, uint8x16_t hi) {
  const uint8x16_t mask = vdupq_n_u8(0x0f);
  uint8x16_t l = vqtbl1q_u8(lo, vandq_u8(s, mask));
  uint8x16_t h = vqtbl1q_u8(hi, vshrq_n_u8(s, 4));
  return veorq_u8(l, h);
}

void muladd_neon(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c,
                 std::size_t n) {
  if (c == 0) return;
  const tables& t = tabs();
  const uint8x16_t lo = vld1q_u8(t.lo[c]);
  const uint8x16_t hi = vld1q_u8(t.hi[c]);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t s = vld1q_u8(src + i);
    uint8x16_t d = vld1q_u8(dst + i);
    vst1q_u8(dst + i, veorq_u8(d, mul_bytes_neon(s, lo, hi)));
  }
  muladd_scalar(dst + i, src + i, c, n - i);
}

void mul_neon(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c,
              std::size_t n) {
  if (c == 0) {
    std::memset(dst, 0, n);
    return;
  }
  const tables& t = tabs();
  const uint8x16_t lo = vld1q_u8(t.lo[c]);
  const uint8x16_t hi = vld1q_u8(t.hi[c]);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t s = vld1q_u8(src + i);
    vst1q_u8(dst + i, mul_bytes_neon(s, lo, hi));
  }
  mul_scalar(dst + i, src + i, c, n - i);
}

void add_neon(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t s = vld1q_u8(src + i);
    uint8x16_t d = vld1q_u8(dst + i);
    vst1q_u8(dst + i, veorq_u8(d, s));
  }
  add_scalar(dst + i, src + i, n - i);
}

#endif  // __aarch64__

}  // namespace

const region_ops& scalar_ops() {
  static const region_ops ops{muladd_scalar, mul_scalar, add_scalar, "scalar"};
  return ops;
}

#if STAIRCASE_X86
bool avx2_available() { return __builtin_cpu_supports("avx2") != 0; }

const region_ops& avx2_ops() {
  static const region_ops ops{muladd_avx2, mul_avx2, add_avx2, "avx2"};
  return ops;
}
#endif

#if defined(__aarch64__)
const region_ops& neon_ops() {
  static const region_ops ops{muladd_neon, mul_neon, add_neon, "neon"};
  return ops;
}
#endif

const region_ops& active_ops() {
#if STAIRCASE_X86
  static const region_ops& resolved = avx2_available() ? avx2_ops() : scalar_ops();
  return resolved;
#elif defined(__aarch64__)
  return neon_ops();
#else
  return scalar_ops();
#endif
}

}  // namespace staircase::gf256
