#pragma once

#include <cstdint>

namespace gme {

/// Deterministic 64-bit generator (splitmix64). Used for all random state
/// construction so that results are reproducible bit-for-bit across runs
/// and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform double in [0, 1).
  double uniform();

  /// Standard normal via Box-Muller.
  double gaussian();

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Derives the sub-seed for sample `index` from a master seed. Samples drawn
/// from sub-seeded generators are independent of evaluation order.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

}  // namespace gme
