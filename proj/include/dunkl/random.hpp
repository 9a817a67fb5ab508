#pragma once

#include <cstdint>
#include <random>

namespace dunkl {

// Seeded generator with a portable uniform mapping. The standard
// distributions are implementation defined, which would break byte-identical
// reruns across toolchains, so only the raw engine output is used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dunkl
