#pragma once

#include <cstdint>
#include <random>

namespace mpa {

/// Seeded generator for every randomized scan. std::mt19937_64 has a
/// standard-mandated output sequence; the real-valued draw below avoids
/// std::uniform_real_distribution, whose algorithm is implementation-defined.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mpa
