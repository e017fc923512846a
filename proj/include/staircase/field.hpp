#pragma once

// Exact arithmetic over GF(q), for prime q < 2^16 and for GF(2^8) with
// reduction polynomial x^8 + x^4 + x^3 + x + 1. A constructed field is
// immutable and safe for unrestricted concurrent reads.

#include <cstdint>
#include <span>
#include <vector>

#include "staircase/errors.hpp"

namespace staircase {

// One field symbol, canonically in [0, q). 16 bits cover both families.
using symbol = std::uint16_t;

enum class field_kind : std::uint8_t { prime = 0, binary8 = 1 };

// x^8 + x^4 + x^3 + x + 1
inline constexpr std::uint32_t binary8_modulus = 0x11b;

struct field_spec {
  field_kind kind = field_kind::prime;
  std::uint32_t modulus = 2;  // prime p, or binary8_modulus

  static field_spec prime(std::uint32_t p) { return {field_kind::prime, p}; }
  static field_spec binary8() { return {field_kind::binary8, binary8_modulus}; }
  bool operator==(const field_spec&) const = default;
};

class field {
 public:
  // Throws param_error on a non-prime modulus, p >= 2^16, or a binary8
  // spec with the wrong polynomial.
  explicit field(const field_spec& spec);

  const field_spec& spec() const { return spec_; }
  std::uint32_t order() const { return order_; }

  symbol add(symbol a, symbol b) const {
    check(a);
    check(b);
    if (spec_.kind == field_kind::binary8) return a ^ b;
    std::uint32_t s = std::uint32_t{a} + b;
    if (s >= order_) s -= order_;
    return static_cast<symbol>(s);
  }

  symbol sub(symbol a, symbol b) const {
    check(a);
    check(b);
    if (spec_.kind == field_kind::binary8) return a ^ b;
    std::uint32_t s = std::uint32_t{a} + order_ - b;
    if (s >= order_) s -= order_;
    return static_cast<symbol>(s);
  }

  symbol neg(symbol a) const { return sub(0, a); }

  symbol mul(symbol a, symbol b) const {
    check(a);
    check(b);
    if (spec_.kind == field_kind::binary8) {
      if (a == 0 || b == 0) return 0;
      return exp_[std::size_t{log_[a]} + log_[b]];
    }
    return static_cast<symbol>(std::uint32_t{a} * b % order_);
  }

  symbol inv(symbol a) const;                  // throws div_zero_error on 0
  symbol pow(symbol a, std::uint64_t e) const;  // pow(a, 0) == 1

  // Throws param_error unless v is a canonical element of this field.
  void check(symbol v) const;

 private:
  field_spec spec_;
  std::uint32_t order_ = 0;
  std::vector<std::uint8_t> log_;  // binary8 only, index by element
  std::vector<symbol> exp_;        // binary8 only, doubled for mul
};

inline field field_make(const field_spec& spec) { return field(spec); }

// Byte payload mapping, binary8 only (one byte per symbol, identity
// embedding). Prime fields are refused with param_error.
std::vector<symbol> bytes_to_symbols(std::span<const std::uint8_t> data,
                                     const field& f);
std::vector<std::uint8_t> symbols_to_bytes(std::span<const symbol> syms,
                                           const field& f);

}  // namespace staircase
