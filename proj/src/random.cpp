#include "staircase/random.hpp"

#include <cerrno>
#include <cstdio>
#include <unistd.h>

#include "staircase/errors.hpp"

#if defined(__linux__) || defined(__APPLE__)
#include <sys/random.h>
#define STAIRCASE_HAVE_GETENTROPY 1
#endif

namespace staircase {

void system_random_source::fill(std::span<std::uint8_t> out) {
#if STAIRCASE_HAVE_GETENTROPY
  bool ok = true;
  std::size_t off = 0;
  while (off < out.size()) {
    std::size_t chunk = std::min<std::size_t>(256, out.size() - off);
    if (getentropy(out.data() + off, chunk) != 0) {
      ok = false;
      break;
    }
    off += chunk;
  }
  if (ok) return;
#endif
  std::FILE* f = std::fopen("/dev/urandom", "rb");
  if (f == nullptr) throw io_error("no system randomness source available");
  std::size_t got = std::fread(out.data(), 1, out.size(), f);
  std::fclose(f);
  if (got != out.size()) {
    throw io_error("short read from /dev/urandom");
  }
}

}  // namespace staircase
