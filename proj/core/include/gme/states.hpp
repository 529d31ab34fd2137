#pragma once

#include "gme/linalg.hpp"

#include <cstdint>

namespace gme {

/// Bipartition of the three parties, or the fully-product split.
enum class Cut { P1_23, P2_13, P3_12, Product };

/// Tripartite pure state on (C^d)⊗3. Ket |abc⟩ maps to index a·d² + b·d + c.
struct PureState {
  int d = 0;
  ComplexVector amplitudes;  // length d³, unit norm

  ComplexMatrix projector() const;
};

struct DensityMatrix {
  int d = 0;
  ComplexMatrix matrix;  // d³ × d³
};

struct ValidationReport {
  double hermiticity_error = 0.0;  // max |ρ − ρ†| entry
  double trace_error = 0.0;        // |tr ρ − 1|
  double min_eigenvalue = 0.0;
  bool hermitian_ok = false;  // ≤ 1e-10
  bool trace_ok = false;      // ≤ 1e-10
  bool psd_ok = false;        // min eigenvalue ≥ −1e-9

  bool ok() const { return hermitian_ok && trace_ok && psd_ok; }
};

ValidationReport validate(const DensityMatrix& rho);

/// (Σ_i |iii⟩)/√d.
PureState ghz(int d);

/// (|001⟩ + |010⟩ + |100⟩)/√3, d = 2.
PureState w_state();

/// (|012⟩ + |021⟩ + |111⟩)/√3, d = 3.
PureState example3_state();

/// (1−x)/d³ · I + x·|ψ⟩⟨ψ|. Throws if the result fails validation.
DensityMatrix isotropic_mix(const PureState& psi, double x);

/// (1−x−y)/8 · I + x·|GHZ⟩⟨GHZ| + y·|W⟩⟨W| on three qubits.
/// Throws if the result fails validation.
DensityMatrix ghz_w_mix(double x, double y);

/// Same mixture without the physicality check; callers that sweep outside
/// the PSD region use validate() on the result instead.
DensityMatrix ghz_w_mix_unchecked(double x, double y);

/// Haar-random pure state: d³ i.i.d. standard complex Gaussian amplitudes,
/// normalized. Deterministic for a fixed seed.
PureState random_pure(int d, std::uint64_t seed);

/// Tensor product of independent Haar-random factors across `cut`;
/// Cut::Product draws three independent single-party factors.
PureState random_biseparable_pure(int d, Cut cut, std::uint64_t seed);

/// Full-rank random mixed state ρ = GG†/tr(GG†) with G a d³×d³ complex
/// Ginibre matrix.
DensityMatrix random_mixed(int d, std::uint64_t seed);

/// Wraps a raw matrix as a DensityMatrix, throwing on validation failure.
DensityMatrix make_density(int d, ComplexMatrix m);

}  // namespace gme
