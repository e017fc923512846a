#include "staircase/bulk.hpp"

#include <string>

#include "staircase/gf256_kernels.hpp"

namespace staircase {

void gf256_apply_map(const matrix& m, const byte_streams& in,
                     byte_streams& out, bool accumulate) {
  if (in.size() != m.cols()) {
    throw param_error("stream count does not match matrix columns");
  }
  const std::size_t len = in.empty() ? 0 : in.front().size();
  for (const auto& s : in) {
    if (s.size() != len) throw param_error("input streams differ in length");
  }
  out.resize(m.rows());
  for (auto& s : out) {
    if (accumulate && s.size() != len) {
      throw param_error("output streams differ in length");
    }
    if (!accumulate) s.assign(len, 0);
  }
  const gf256::region_ops& ops = gf256::active_ops();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint8_t* dst = out[r].data();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const symbol coeff = m.at(r, c);
      if (coeff == 0) continue;
      if (coeff > 255) throw param_error("coefficient outside GF(256)");
      const std::uint8_t* src = in[c].data();
      if (coeff == 1) {
        ops.add(dst, src, len);
      } else {
        ops.muladd(dst, src, static_cast<std::uint8_t>(coeff), len);
      }
    }
  }
}

}  // namespace staircase
