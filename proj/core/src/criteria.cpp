#include "gme/criteria.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace gme {

double ky_fan(const RealMatrix& m, int k) {
  const int max_k = static_cast<int>(std::min(m.rows(), m.cols()));
  if (k < 1 || k > max_k) throw std::invalid_argument("ky_fan: k out of range");
  const RealVector sv = singular_values(m);
  return sv.head(k).sum();
}

std::array<RealVector, 3> unfolding_spectra(const CorrelationData& data) {
  return {singular_values(unfold(data, Cut::P1_23)), singular_values(unfold(data, Cut::P2_13)),
          singular_values(unfold(data, Cut::P3_12))};
}

namespace {

double m_k_from_spectra(const std::array<RealVector, 3>& spectra, int k) {
  double sum = 0.0;
  for (const auto& sv : spectra) sum += sv.head(k).sum();
  return sum / 3.0;
}

}  // namespace

double m_k(const CorrelationData& data, int k) {
  if (k < 1 || k > data.n()) throw std::invalid_argument("m_k: k out of range");
  return m_k_from_spectra(unfolding_spectra(data), k);
}

double theorem1_threshold(int d, int k) {
  if (d < 2) throw std::invalid_argument("theorem1_threshold: d must be >= 2");
  if (k < 1 || k > d * d - 1) throw std::invalid_argument("theorem1_threshold: k out of range");
  return (2.0 * std::sqrt(2.0) / 3.0) * (2.0 * std::sqrt(static_cast<double>(k)) + 1.0) *
         ((d - 1.0) / d) * std::sqrt((d + 1.0) / d);
}

double theorem1_margin(const CorrelationData& data, int k) {
  return m_k(data, k) - theorem1_threshold(data.d, k);
}

double theorem1_margin(const DensityMatrix& rho, int k) {
  const GeneratorBasis basis = gellmann_basis(rho.d);
  return theorem1_margin(correlation_tensors(rho, basis), k);
}

std::pair<int, double> best_k(const DensityMatrix& rho) {
  const GeneratorBasis basis = gellmann_basis(rho.d);
  const CorrelationData data = correlation_tensors(rho, basis);
  const auto spectra = unfolding_spectra(data);
  int arg = 1;
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= data.n(); ++k) {
    const double margin = m_k_from_spectra(spectra, k) - theorem1_threshold(data.d, k);
    if (margin > best) {
      best = margin;
      arg = k;
    }
  }
  return {arg, best};
}

double theorem2_bound_raw(const CorrelationData& data) {
  return data.triple_norm() / (2.0 * std::sqrt(2.0)) - (data.d - 1.0) / data.d;
}

double theorem2_bound(const CorrelationData& data) {
  return std::max(theorem2_bound_raw(data), 0.0);
}

double pure_gme_concurrence(const PureState& psi) {
  const DensityMatrix rho{psi.d, psi.projector()};
  const Purities p = reduced_purities(rho);
  const double linear = std::min({1.0 - p.p1, 1.0 - p.p2, 1.0 - p.p3});
  return std::sqrt(std::max(linear, 0.0));
}

LemmaBounds lemma_bounds(int d, int k) {
  if (d < 2) throw std::invalid_argument("lemma_bounds: d must be >= 2");
  if (k < 1 || k > d * d - 1) throw std::invalid_argument("lemma_bounds: k out of range");
  const double dm = d - 1.0;
  const double d3 = static_cast<double>(d) * d * d;
  LemmaBounds b{};
  b.fully_separable = std::sqrt(8.0 * dm * dm * dm / d3);
  b.biseparable_matching_cut = std::sqrt(8.0 * dm * dm * (d + 1.0) / d3);
  b.biseparable_other_cut = std::sqrt(8.0 * k * dm * dm * (d + 1.0) / d3);
  return b;
}

CriterionReport evaluate_criteria(const DensityMatrix& rho, const GeneratorBasis& basis) {
  const CorrelationData data = correlation_tensors(rho, basis);
  const auto spectra = unfolding_spectra(data);

  CriterionReport report;
  report.d = rho.d;
  report.theorem2_bound = theorem2_bound(data);
  report.best_margin = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= data.n(); ++k) {
    KRecord rec;
    rec.k = k;
    rec.m_k = m_k_from_spectra(spectra, k);
    rec.threshold = theorem1_threshold(rho.d, k);
    rec.margin = rec.m_k - rec.threshold;
    rec.gme_certified = rec.margin > 0.0;
    if (rec.margin > report.best_margin) {
      report.best_margin = rec.margin;
      report.best_k = k;
    }
    report.per_k.push_back(rec);
  }

  // Pure input: report the exact concurrence alongside the bound.
  const double purity = rho.matrix.squaredNorm();
  if (purity > 1.0 - 1e-10) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix);
    const int last = static_cast<int>(solver.eigenvalues().size()) - 1;
    PureState psi;
    psi.d = rho.d;
    psi.amplitudes = solver.eigenvectors().col(last);
    report.pure_exact = pure_gme_concurrence(psi);
  }
  return report;
}

}  // namespace gme
