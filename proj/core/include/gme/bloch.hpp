#pragma once

#include "gme/linalg.hpp"
#include "gme/states.hpp"
#include "gme/su_basis.hpp"

#include <vector>

namespace gme {

/// The seven correlation tensors of a tripartite state in a fixed SU(d)
/// generator basis: t¹_i = tr(ρ λ_i⊗I⊗I), t¹²_ij = tr(ρ λ_i⊗λ_j⊗I),
/// t¹²³_ijk = tr(ρ λ_i⊗λ_j⊗λ_k), and permutations.
struct CorrelationData {
  int d = 0;
  RealVector t1, t2, t3;       // length n = d²−1
  RealMatrix t12, t13, t23;    // n × n
  std::vector<double> t123;    // n³, index (i·n + j)·n + k

  int n() const { return d * d - 1; }
  double cube(int i, int j, int k) const { return t123[(i * n() + j) * n() + k]; }
  double& cube(int i, int j, int k) { return t123[(i * n() + j) * n() + k]; }

  /// A = ‖T¹‖² + ‖T²‖² + ‖T³‖².
  double single_norm_sq() const;
  /// B = ‖T¹²‖² + ‖T¹³‖² + ‖T²³‖².
  double pair_norm_sq() const;
  /// C = ‖T¹²³‖².
  double triple_norm_sq() const;
  double triple_norm() const;
};

/// Computes all seven tensors. Imaginary residues are checked against 1e-12
/// before being discarded.
CorrelationData correlation_tensors(const DensityMatrix& rho, const GeneratorBasis& basis);

/// Assembles the density matrix back from its correlation tensors with
/// coefficients 1/d³, 1/(2d²), 1/(4d), 1/8.
DensityMatrix reconstruct(const CorrelationData& data, const GeneratorBasis& basis);

/// Unfolding of T¹²³ that singles out one party as rows. For cut 1|23 the
/// entry (i, n(j−1)+k) is t_ijk with n = d²−1; the remaining parties index
/// columns in ascending party order.
RealMatrix unfold(const CorrelationData& data, Cut cut);

struct Purities {
  double p1, p2, p3;     // tr ρ_i²
  double p23, p13, p12;  // tr ρ_jk²
};

/// Marginal purities via partial trace.
Purities reduced_purities(const DensityMatrix& rho);

/// Same purities from the tensor norms: tr ρ₁² = 1/d + ½‖T¹‖²,
/// tr ρ₂₃² = 1/d² + (1/2d)(‖T²‖²+‖T³‖²) + ¼‖T²³‖², and permutations.
Purities closed_form_purities(const CorrelationData& data);

}  // namespace gme
