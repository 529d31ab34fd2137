#pragma once

#include "gme/linalg.hpp"

#include <vector>

namespace gme {

/// The d²−1 generalized Gell-Mann matrices of SU(d).
///
/// Ordering: all symmetric off-diagonal generators E_jk + E_kj for j < k in
/// lexicographic order, then the antisymmetric ones −i·E_jk + i·E_kj in the
/// same order, then the d−1 diagonal generators
/// √(2/(l(l+1))) · (Σ_{m≤l} E_mm − l·E_{l+1,l+1}) for l = 1..d−1.
///
/// Normalization is tr(λ_a λ_b) = 2δ_ab. Tensor entries depend on this
/// ordering; all Frobenius and Ky Fan norms are ordering-invariant.
struct GeneratorBasis {
  int d = 0;
  std::vector<ComplexMatrix> generators;

  int count() const { return d * d - 1; }
};

/// Builds the basis for local dimension d ≥ 2.
GeneratorBasis gellmann_basis(int d);

}  // namespace gme
