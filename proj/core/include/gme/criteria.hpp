#pragma once

#include "gme/bloch.hpp"
#include "gme/states.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gme {

/// Sum of the k largest singular values. Throws if k is out of range.
double ky_fan(const RealMatrix& m, int k);

/// Singular values of the three unfoldings (cuts 1|23, 2|13, 3|12), each
/// decreasing. One SVD per unfolding serves every k.
std::array<RealVector, 3> unfolding_spectra(const CorrelationData& data);

/// M_k(ρ): average of the three unfolding Ky Fan k-norms.
double m_k(const CorrelationData& data, int k);

/// Right-hand side of the detection inequality:
/// (2√2/3)(2√k + 1)((d−1)/d)√((d+1)/d).
double theorem1_threshold(int d, int k);

/// M_k(ρ) − theorem1_threshold(d, k); positive certifies GME.
double theorem1_margin(const DensityMatrix& rho, int k);
double theorem1_margin(const CorrelationData& data, int k);

/// The k in 1..d²−1 with the largest margin, ties toward smaller k.
std::pair<int, double> best_k(const DensityMatrix& rho);

/// GME-concurrence lower bound max{‖T¹²³‖/(2√2) − (d−1)/d, 0}.
double theorem2_bound(const CorrelationData& data);

/// Unclamped version, used for threshold root-finding.
double theorem2_bound_raw(const CorrelationData& data);

/// Exact pure-state GME concurrence:
/// √min{1 − tr ρ₁², 1 − tr ρ₂², 1 − tr ρ₃²}.
double pure_gme_concurrence(const PureState& psi);

/// Ky Fan norm bounds on pure-state unfoldings by separability class.
struct LemmaBounds {
  double fully_separable;          // √(8(d−1)³/d³), any unfolding, any k
  double biseparable_matching_cut; // √(8(d−1)²(d+1)/d³)
  double biseparable_other_cut;    // √(8k(d−1)²(d+1)/d³)
};

LemmaBounds lemma_bounds(int d, int k);

struct KRecord {
  int k;
  double m_k;
  double threshold;
  double margin;
  bool gme_certified;  // margin > 0
};

/// Per-state verdicts. The criteria are one-sided: a nonpositive margin is
/// inconclusive, never "separable".
struct CriterionReport {
  int d = 0;
  std::vector<KRecord> per_k;
  int best_k = 0;
  double best_margin = 0.0;
  double theorem2_bound = 0.0;
  std::optional<double> pure_exact;  // set when the state is pure

  bool gme_certified() const { return best_margin > 0.0 || theorem2_bound > 0.0; }
};

CriterionReport evaluate_criteria(const DensityMatrix& rho, const GeneratorBasis& basis);

}  // namespace gme
