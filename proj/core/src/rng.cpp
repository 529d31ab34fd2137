#include "gme/rng.hpp"

#include <cmath>

namespace gme {

namespace {
std::uint64_t splitmix_step(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t SplitMix64::next() { return splitmix_step(state_); }

double SplitMix64::uniform() {
  // 53 random bits into [0, 1)
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master ^ (0xD1B54A32D192ED03ULL * (index + 1));
  splitmix_step(state);
  return splitmix_step(state);
}

}  // namespace gme
