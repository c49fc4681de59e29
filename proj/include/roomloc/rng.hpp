#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace roomloc {

/// FNV-1a 64-bit over arbitrary bytes. Used for seed derivation and file
/// fingerprints (not cryptographic).
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t basis);

/// Deterministic random source. The engine is std::mt19937_64 (its raw output
/// is pinned by the standard); all value transforms are implemented here so
/// that sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_int(std::uint64_t n);

  int uniform_int(int lo, int hi_inclusive) {
    return lo + static_cast<int>(uniform_int(
                    static_cast<std::uint64_t>(hi_inclusive - lo + 1)));
  }

  /// Standard normal via Box-Muller (no cached second value).
  double normal();

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  /// Fisher-Yates with this engine; std::shuffle is implementation-defined.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Independent child stream derived from this rng's seed and a tag. Children
  /// depend only on (seed, tag), not on how much of this stream was consumed.
  Rng substream(std::string_view tag) const;
  Rng substream(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace roomloc
