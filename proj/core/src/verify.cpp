#include "gme/verify.hpp"

#include "gme/bloch.hpp"
#include "gme/criteria.hpp"
#include "gme/rng.hpp"
#include "gme/states.hpp"
#include "gme/su_basis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gme {

namespace {

constexpr double kIdentityTol = 1e-10;
constexpr double kInequalityTol = 1e-9;

struct Accumulator {
  CheckRecord rec;

  Accumulator(std::string id, int d, double tolerance) {
    rec.id = std::move(id);
    rec.d = d;
    rec.tolerance = tolerance;
  }

  void record(double violation) {
    ++rec.trials;
    if (violation <= rec.tolerance) ++rec.pass_count;
    rec.max_violation = std::max(rec.max_violation, violation);
  }
};

DensityMatrix projector_of(const PureState& psi) { return DensityMatrix{psi.d, psi.projector()}; }

}  // namespace

bool VerificationReport::overall_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.passed(); });
}

CheckRecord check_purity_identity(int trials, int d, std::uint64_t seed) {
  Accumulator acc("purity-expansion", d, kIdentityTol);
  const GeneratorBasis basis = gellmann_basis(d);
  for (int t = 0; t < trials; ++t) {
    const DensityMatrix rho = (t % 2 == 0) ? random_mixed(d, mix_seed(seed, t))
                                           : projector_of(random_pure(d, mix_seed(seed, t)));
    const CorrelationData data = correlation_tensors(rho, basis);
    const double direct = rho.matrix.squaredNorm();
    const double expansion = 1.0 / (d * d * d) + data.single_norm_sq() / (2.0 * d * d) +
                             data.pair_norm_sq() / (4.0 * d) + data.triple_norm_sq() / 8.0;
    acc.record(std::abs(direct - expansion));
  }
  return acc.rec;
}

CheckRecord check_marginal_equalities(int trials, int d, std::uint64_t seed) {
  Accumulator acc("marginal-equalities", d, kIdentityTol);
  for (int t = 0; t < trials; ++t) {
    const Purities p = reduced_purities(projector_of(random_pure(d, mix_seed(seed, t))));
    const double v = std::max({std::abs(p.p1 - p.p23), std::abs(p.p2 - p.p13),
                               std::abs(p.p3 - p.p12)});
    acc.record(v);
  }
  return acc.rec;
}

CheckRecord check_abc_identity(int trials, int d, std::uint64_t seed) {
  Accumulator acc("abc-identity", d, kIdentityTol);
  const GeneratorBasis basis = gellmann_basis(d);
  for (int t = 0; t < trials; ++t) {
    const CorrelationData data =
        correlation_tensors(projector_of(random_pure(d, mix_seed(seed, t))), basis);
    const double lhs = data.pair_norm_sq() / 4.0;
    const double rhs = (0.5 - 1.0 / d) * data.single_norm_sq() + 3.0 / d - 3.0 / (d * d);
    acc.record(std::abs(lhs - rhs));
  }
  return acc.rec;
}

CheckRecord check_lemma_bounds(int trials, int d, std::uint64_t seed) {
  Accumulator acc("lemma-bounds", d, kInequalityTol);
  const GeneratorBasis basis = gellmann_basis(d);
  const int n = d * d - 1;

  for (int t = 0; t < trials; ++t) {
    // fully-product sample: bound (i) on every unfolding and every k
    {
      const PureState psi = random_biseparable_pure(d, Cut::Product, mix_seed(seed, 4 * t));
      const CorrelationData data = correlation_tensors(projector_of(psi), basis);
      const auto spectra = unfolding_spectra(data);
      double worst = 0.0;
      for (const auto& sv : spectra) {
        double partial = 0.0;
        for (int k = 1; k <= n; ++k) {
          partial += sv(k - 1);
          worst = std::max(worst, partial - lemma_bounds(d, k).fully_separable);
        }
      }
      acc.record(std::max(worst, 0.0));
    }
    // one sample per cut: bound (ii) on the matching unfolding, (iii) on the
    // other two
    const Cut cuts[3] = {Cut::P1_23, Cut::P2_13, Cut::P3_12};
    for (int c = 0; c < 3; ++c) {
      const PureState psi = random_biseparable_pure(d, cuts[c], mix_seed(seed, 4 * t + 1 + c));
      const CorrelationData data = correlation_tensors(projector_of(psi), basis);
      const auto spectra = unfolding_spectra(data);
      double worst = 0.0;
      for (int u = 0; u < 3; ++u) {
        double partial = 0.0;
        for (int k = 1; k <= n; ++k) {
          partial += spectra[u](k - 1);
          const LemmaBounds b = lemma_bounds(d, k);
          const double bound = (u == c) ? b.biseparable_matching_cut : b.biseparable_other_cut;
          worst = std::max(worst, partial - bound);
        }
      }
      acc.record(std::max(worst, 0.0));
    }
  }
  return acc.rec;
}

CheckRecord check_bound_soundness(int trials, int d, std::uint64_t seed) {
  Accumulator acc("bound-soundness", d, kInequalityTol);
  const GeneratorBasis basis = gellmann_basis(d);
  for (int t = 0; t < trials; ++t) {
    const PureState psi = random_pure(d, mix_seed(seed, t));
    const double bound = theorem2_bound(correlation_tensors(projector_of(psi), basis));
    acc.record(std::max(bound - pure_gme_concurrence(psi), 0.0));
  }
  return acc.rec;
}

CheckRecord check_biseparable_inconclusive(int trials, int d, std::uint64_t seed) {
  Accumulator acc("biseparable-inconclusive", d, kInequalityTol);
  const GeneratorBasis basis = gellmann_basis(d);
  const int n = d * d - 1;
  const Cut cuts[4] = {Cut::P1_23, Cut::P2_13, Cut::P3_12, Cut::Product};
  for (int t = 0; t < trials; ++t)
    for (int c = 0; c < 4; ++c) {
      const PureState psi = random_biseparable_pure(d, cuts[c], mix_seed(seed, 4 * t + c));
      const CorrelationData data = correlation_tensors(projector_of(psi), basis);
      const auto spectra = unfolding_spectra(data);
      double worst = 0.0;
      for (int k = 1; k <= n; ++k) {
        double sum = 0.0;
        for (const auto& sv : spectra) sum += sv.head(k).sum();
        worst = std::max(worst, sum / 3.0 - theorem1_threshold(d, k));
      }
      acc.record(std::max(worst, 0.0));
    }
  return acc.rec;
}

CheckRecord check_reconstruction_roundtrip(int trials, int d, std::uint64_t seed) {
  Accumulator acc("reconstruction-roundtrip", d, kIdentityTol);
  const GeneratorBasis basis = gellmann_basis(d);
  for (int t = 0; t < trials; ++t) {
    const DensityMatrix rho = (t % 2 == 0) ? random_mixed(d, mix_seed(seed, t))
                                           : projector_of(random_pure(d, mix_seed(seed, t)));
    const DensityMatrix back = reconstruct(correlation_tensors(rho, basis), basis);
    acc.record((back.matrix - rho.matrix).cwiseAbs().maxCoeff());
  }
  return acc.rec;
}

VerificationReport run_suite(const std::vector<int>& dims, int trials, std::uint64_t seed,
                             double tolerance_scale) {
  VerificationReport report;
  report.suite = "gme-identities";
  report.seed = seed;
  report.dims = dims;
  report.trials = trials;
  std::uint64_t salt = 0;
  for (int d : dims) {
    auto sub = [&] { return mix_seed(seed, 1000 + salt++); };
    report.checks.push_back(check_purity_identity(trials, d, sub()));
    report.checks.push_back(check_reconstruction_roundtrip(trials, d, sub()));
    report.checks.push_back(check_marginal_equalities(trials, d, sub()));
    report.checks.push_back(check_abc_identity(trials, d, sub()));
    report.checks.push_back(check_lemma_bounds(trials, d, sub()));
    report.checks.push_back(check_bound_soundness(trials, d, sub()));
    report.checks.push_back(check_biseparable_inconclusive(trials, d, sub()));
  }
  if (tolerance_scale != 1.0)
    for (CheckRecord& c : report.checks) c.tolerance *= tolerance_scale;
  return report;
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream out;
  auto fmt = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return std::string(buf);
  };
  out << "# gme verify report\n";
  out << "# suite: " << report.suite << "\n";
  out << "# seed: " << report.seed << "\n";
  out << "# dims:";
  for (int d : report.dims) out << " " << d;
  out << "\n# trials: " << report.trials << "\n";
  out << "check,d,trials,passed,max_violation,tolerance,status\n";
  for (const CheckRecord& c : report.checks)
    out << c.id << "," << c.d << "," << c.trials << "," << c.pass_count << ","
        << fmt(c.max_violation) << "," << fmt(c.tolerance) << ","
        << (c.passed() ? "pass" : "FAIL") << "\n";
  out << "overall," << (report.overall_pass() ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace gme
