#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gme {

struct CheckRecord {
  std::string id;
  int d = 0;
  int trials = 0;
  int pass_count = 0;
  double max_violation = 0.0;
  double tolerance = 0.0;

  bool passed() const { return max_violation <= tolerance; }
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<int> dims;
  int trials = 0;
  std::vector<CheckRecord> checks;

  bool overall_pass() const;
};

// Identity checks run at 1e-10 (pure floating error); inequality checks at
// 1e-9 slack (singular values of near-rank-deficient matrices). The
// tolerance_scale hook shrinks every tolerance, exercising the failure path.

/// |tr ρ² − (1/d³ + A/(2d²) + B/(4d) + C/8)| on random pure and mixed states.
CheckRecord check_purity_identity(int trials, int d, std::uint64_t seed);

/// |tr ρ_i² − tr ρ_jk²| on Haar-random pure states, all complementary pairs.
CheckRecord check_marginal_equalities(int trials, int d, std::uint64_t seed);

/// |B/4 − ((1/2 − 1/d)A + 3/d − 3/d²)| on Haar-random pure states.
CheckRecord check_abc_identity(int trials, int d, std::uint64_t seed);

/// Unfolding Ky Fan norms of product and biseparable pure samples against
/// the separability-class bounds, every k.
CheckRecord check_lemma_bounds(int trials, int d, std::uint64_t seed);

/// theorem2_bound ≤ pure_gme_concurrence on Haar-random pure states.
CheckRecord check_bound_soundness(int trials, int d, std::uint64_t seed);

/// Biseparable pure samples per cut: no Theorem 1 margin positive for any k.
CheckRecord check_biseparable_inconclusive(int trials, int d, std::uint64_t seed);

/// Entrywise |reconstruct(correlation_tensors(ρ)) − ρ| on random pure and
/// mixed states.
CheckRecord check_reconstruction_roundtrip(int trials, int d, std::uint64_t seed);

/// All checks for every d in dims. Deterministic given the seed.
VerificationReport run_suite(const std::vector<int>& dims, int trials, std::uint64_t seed,
                             double tolerance_scale = 1.0);

/// Structured text rendering; byte-stable for identical reports.
std::string format_report(const VerificationReport& report);

}  // namespace gme
