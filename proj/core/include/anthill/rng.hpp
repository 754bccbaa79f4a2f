#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace anthill {

// Deterministic random source shared by every optimizer. All mappings from
// raw engine output to floats are hand-rolled because the std::distribution
// classes are not byte-reproducible across standard libraries, and seeded
// runs here must replay exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // In [0, 1): top 53 bits of one engine draw.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via the Box-Muller cosine branch. Consumes exactly two
  // engine draws per call; the sine twin is discarded to keep the draw count
  // independent of call parity.
  double normal() {
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;          // [0,1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double normal(double sigma) { return sigma * normal(); }

  // Fair coin from the top bit of one draw.
  bool coin() { return (engine_() >> 63) != 0; }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace anthill
