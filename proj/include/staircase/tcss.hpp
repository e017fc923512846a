#pragma once

// Threshold-changeable secret sharing: the threshold is raised from t
// to t' with no communication by each party deleting the tail of its
// share, keeping exactly the prefix a reader contacting t' parties
// would fetch. Deletion is irreversible by construction and the
// resulting share size k/(t'-z) units is the minimum possible.

#include <cstdint>

#include "staircase/codec.hpp"
#include "staircase/rational.hpp"

namespace staircase {

struct threshold_state {
  std::uint32_t original_t = 0;
  std::uint32_t current = 0;
  std::uint64_t kept_symbols = 0;  // per block, k*alpha/(current - z)
};

// Validates t' against the scheme: universal schemes accept any
// supported size in [t, n]; fixed schemes accept only t' = d.
threshold_state threshold_state_for(const scheme_params& p,
                                    std::uint32_t t_prime);

// Keeps the first k*alpha/(t'-z) symbols of each block of the share.
// Raising to the current threshold is the identity; lowering is
// refused.
share rethreshold(const scheme_params& p, const share& w,
                  std::uint32_t t_prime);

// k/(t'-z) units per share.
rational storage_cost(const scheme_params& p, std::uint32_t t_prime);

// End-to-end verification at t': every t'-subset of truncated shares
// decodes, the truncated size matches the storage cost, the rank
// secrecy criterion still holds on the truncated maps, and residual
// overheads for every supported d >= t' stay at kz/(d-z).
bool verify_tcss(const scheme_params& p, std::uint32_t t_prime,
                 const field& f);

}  // namespace staircase
