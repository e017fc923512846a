#pragma once

// Stream application of a coefficient matrix over GF(256): every input
// stream holds one symbol position across all blocks of a payload, so a
// matrix row turns into a handful of region multiply-accumulates. This
// is the bulk path behind split/reconstruct; the per-block matrix code
// stays the reference semantics.

#include <cstdint>
#include <vector>

#include "staircase/matrix.hpp"

namespace staircase {

using byte_streams = std::vector<std::vector<std::uint8_t>>;

// out[r] = (or ^=, when accumulate) sum_c m(r, c) * in[c], elementwise
// over streams of equal length. Matrix entries must be < 256.
void gf256_apply_map(const matrix& m, const byte_streams& in,
                     byte_streams& out, bool accumulate = false);

}  // namespace staircase
