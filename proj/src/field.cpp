#include "staircase/field.hpp"

#include <string>

namespace staircase {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Bit-serial product modulo x^8 + x^4 + x^3 + x + 1; used only to seed
// the log/antilog tables at construction.
std::uint8_t poly_mul(std::uint8_t a, std::uint8_t b) {
  std::uint32_t acc = 0;
  std::uint32_t aa = a;
  for (int i = 0; i < 8; ++i) {
    if (b & (1u << i)) acc ^= aa << i;
  }
  for (int bit = 15; bit >= 8; --bit) {
    if (acc & (1u << bit)) acc ^= binary8_modulus << (bit - 8);
  }
  return static_cast<std::uint8_t>(acc);
}

}  // namespace

field::field(const field_spec& spec) : spec_(spec) {
  switch (spec.kind) {
    case field_kind::prime:
      if (spec.modulus >= (1u << 16)) {
        throw param_error("prime modulus must be < 2^16, got " +
                          std::to_string(spec.modulus));
      }
      if (!is_prime(spec.modulus)) {
        throw param_error("modulus " + std::to_string(spec.modulus) +
                          " is not prime");
      }
      order_ = spec.modulus;
      return;
    case field_kind::binary8: {
      if (spec.modulus != binary8_modulus) {
        throw param_error("binary8 reduction polynomial must be 0x11b");
      }
      order_ = 256;
      // 3 generates the multiplicative group of this field; the fill
      // below verifies that by demanding 255 distinct powers.
      log_.assign(256, 0);
      exp_.assign(510, 0);
      std::uint8_t v = 1;
      for (std::uint32_t i = 0; i < 255; ++i) {
        if (i != 0 && v == 1) throw param_error("binary8 generator check failed");
        exp_[i] = v;
        exp_[i + 255] = v;
        log_[v] = static_cast<std::uint8_t>(i);
        v = poly_mul(v, 3);
      }
      if (v != 1) throw param_error("binary8 generator check failed");
      return;
    }
  }
  throw param_error("unknown field kind");
}

symbol field::inv(symbol a) const {
  check(a);
  if (a == 0) throw div_zero_error("inverse of zero");
  if (spec_.kind == field_kind::binary8) {
    return exp_[255 - log_[a]];
  }
  return pow(a, order_ - 2);
}

symbol field::pow(symbol a, std::uint64_t e) const {
  check(a);
  symbol result = 1;
  symbol base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

void field::check(symbol v) const {
  if (v >= order_) {
    throw param_error("value " + std::to_string(v) +
                      " is not an element of GF(" + std::to_string(order_) +
                      ")");
  }
}

std::vector<symbol> bytes_to_symbols(std::span<const std::uint8_t> data,
                                     const field& f) {
  if (f.spec().kind != field_kind::binary8) {
    throw param_error("byte payloads require the binary8 field");
  }
  return std::vector<symbol>(data.begin(), data.end());
}

std::vector<std::uint8_t> symbols_to_bytes(std::span<const symbol> syms,
                                           const field& f) {
  if (f.spec().kind != field_kind::binary8) {
    throw param_error("byte payloads require the binary8 field");
  }
  std::vector<std::uint8_t> out;
  out.reserve(syms.size());
  for (symbol s : syms) {
    f.check(s);
    out.push_back(static_cast<std::uint8_t>(s));
  }
  return out;
}

}  // namespace staircase
