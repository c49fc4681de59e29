#include "roomloc/rng.hpp"

#include <cmath>
#include <cstring>
#include <numbers>

namespace roomloc {

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t basis) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = basis;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  return fnv1a64(bytes.data(), bytes.size(), 0xcbf29ce484222325ULL);
}

std::uint64_t Rng::uniform_int(std::uint64_t n) {
  // rejection sampling to avoid modulo bias
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

double Rng::normal() {
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Rng Rng::substream(std::string_view tag) const {
  std::uint64_t h = fnv1a64(&seed_, sizeof(seed_), 0xcbf29ce484222325ULL);
  h = fnv1a64(tag.data(), tag.size(), h);
  return Rng(h);
}

Rng Rng::substream(std::uint64_t index) const {
  std::uint64_t h = fnv1a64(&seed_, sizeof(seed_), 0xcbf29ce484222325ULL);
  h = fnv1a64(&index, sizeof(index), h);
  return Rng(h);
}

}  // namespace roomloc
