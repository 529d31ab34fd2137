#include "gme/threshold.hpp"

#include "gme/criteria.hpp"
#include "gme/su_basis.hpp"

#include <cmath>

namespace gme {

double find_threshold(const StateSpec& family, Criterion criterion, int k, double lo, double hi) {
  const GeneratorBasis basis = gellmann_basis(family.d);

  auto margin_at = [&](double x) {
    // no PSD gate here: the margin stays affine through the boundary and the
    // root is what callers want
    const DensityMatrix rho = family.resolve_with(StateSpec::kFreeParam, x, false);
    const CorrelationData data = correlation_tensors(rho, basis);
    return criterion == Criterion::Theorem1 ? theorem1_margin(data, k)
                                            : theorem2_bound_raw(data);
  };

  double f_lo = margin_at(lo);
  double f_hi = margin_at(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0))
    throw NoSignChange("criterion does not change sign on the bracket");

  double a = lo, b = hi;
  while (b - a > 1e-8) {
    const double mid = 0.5 * (a + b);
    const double f_mid = margin_at(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      a = mid;
      f_lo = f_mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace gme
