#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace telemelody {

/// Seedable random stream with a platform-independent [0,1) draw.
///
/// std::uniform_real_distribution is implementation-defined, so draws go
/// through the mt19937_64 output directly: identical seeds give identical
/// streams on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// FNV-1a hash, used to derive stable per-song seeds from a base seed + id.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t base, const std::string& id) {
  return base ^ fnv1a(id);
}

}  // namespace telemelody
