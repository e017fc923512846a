#pragma once

// Bit-exact share file format. All multi-byte integers are big-endian.
//
//   offset  size  field
//   0       4     magic "SCSS"
//   4       1     version (1)
//   5       1     scheme kind (0 fixed, 1 universal, 2 delta)
//   6       1     field kind (0 prime, 1 binary8)
//   7       2     field modulus (prime p, or 0x011b for binary8)
//   9       2     n
//   11      2     k
//   13      2     z
//   15      2     d (fixed kind; 0 otherwise)
//   17      2     delta count (0 for kinds 0-1)
//   19      2*c   delta values, decreasing, t included
//   ..      2     current threshold t'
//   ..      2     share index
//   ..      2     evaluation point
//   ..      8     secret byte length
//   ..      4     block count
//   ..      ...   payload: blocks x kept symbols,
//                 1 byte/symbol (binary8) or 2 bytes big-endian (prime)

#include <cstdint>
#include <span>
#include <vector>

#include "staircase/field.hpp"
#include "staircase/scheme.hpp"

namespace staircase {

inline constexpr char share_magic[4] = {'S', 'C', 'S', 'S'};
inline constexpr std::uint8_t share_version = 1;

struct share_file_header {
  scheme_kind kind = scheme_kind::universal;
  field_kind fkind = field_kind::binary8;
  std::uint16_t modulus = static_cast<std::uint16_t>(binary8_modulus);
  std::uint16_t n = 0, k = 0, z = 0;
  std::uint16_t d = 0;                  // fixed kind only
  std::vector<std::uint16_t> delta;     // delta kind only
  std::uint16_t threshold = 0;          // current t'
  std::uint16_t index = 0;              // share index
  std::uint16_t eval_point = 0;
  std::uint64_t secret_bytes = 0;
  std::uint32_t blocks = 0;

  bool operator==(const share_file_header&) const = default;

  // Everything that must agree across one share set.
  bool same_set(const share_file_header& o) const {
    return kind == o.kind && fkind == o.fkind && modulus == o.modulus &&
           n == o.n && k == o.k && z == o.z && d == o.d && delta == o.delta &&
           threshold == o.threshold && secret_bytes == o.secret_bytes &&
           blocks == o.blocks;
  }
};

std::vector<std::uint8_t> encode_header(const share_file_header& h);

// Parses and validates the fixed-size fields; throws format_error on
// anything malformed or truncated. header_size receives the total
// header length in bytes.
share_file_header parse_header(std::span<const std::uint8_t> data,
                               std::size_t& header_size);

field_spec spec_from_header(const share_file_header& h);
scheme_params params_from_header(const share_file_header& h);

std::size_t symbol_width(field_kind k);  // 1 or 2 bytes

}  // namespace staircase
