#pragma once

#include "gme/state_spec.hpp"

#include <stdexcept>

namespace gme {

enum class Criterion { Theorem1, Theorem2 };

class NoSignChange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter value where the Theorem 1 margin (for the given k) or the
/// unclamped Theorem 2 bound crosses zero along the family's free parameter.
/// Bisection on [lo, hi] to 1e-8; requires the supported affine families,
/// for which the crossing is unique. Throws NoSignChange when the criterion
/// never fires on the bracket.
double find_threshold(const StateSpec& family, Criterion criterion, int k, double lo, double hi);

}  // namespace gme
