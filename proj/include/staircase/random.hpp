#pragma once

// Randomness sources. Key material must come from the operating
// environment's secure generator; deterministic sources exist for tests
// and self checks only.

#include <cstdint>
#include <random>
#include <span>

namespace staircase {

class random_source {
 public:
  virtual ~random_source() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

// OS entropy (getentropy, with /dev/urandom as fallback). Throws
// io_error if neither works.
class system_random_source final : public random_source {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

// Deterministic source for tests; not for production key material.
class seeded_random_source final : public random_source {
 public:
  explicit seeded_random_source(std::uint64_t seed) : rng_(seed) {}
  void fill(std::span<std::uint8_t> out) override {
    for (auto& b : out) b = static_cast<std::uint8_t>(rng_());
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace staircase
