#include "gme/states.hpp"

#include "gme/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gme {

namespace {

int cube(int d) { return d * d * d; }

ComplexVector haar_vector(int dim, SplitMix64& rng) {
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    v(i) = Complex(re, im);
  }
  v.normalize();
  return v;
}

}  // namespace

ComplexMatrix PureState::projector() const { return amplitudes * amplitudes.adjoint(); }

ValidationReport validate(const DensityMatrix& rho) {
  ValidationReport report;
  report.hermiticity_error = (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
  report.trace_error = std::abs(rho.matrix.trace() - Complex(1.0, 0.0));
  report.hermitian_ok = report.hermiticity_error <= 1e-10;
  report.trace_ok = report.trace_error <= 1e-10;
  if (report.hermitian_ok) {
    const ComplexMatrix sym = 0.5 * (rho.matrix + rho.matrix.adjoint());
    report.min_eigenvalue = hermitian_eigenvalues(sym).minCoeff();
    report.psd_ok = report.min_eigenvalue >= -1e-9;
  } else {
    report.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    report.psd_ok = false;
  }
  return report;
}

PureState ghz(int d) {
  if (d < 2) throw std::invalid_argument("ghz: d must be >= 2");
  PureState psi;
  psi.d = d;
  psi.amplitudes = ComplexVector::Zero(cube(d));
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) psi.amplitudes(i * d * d + i * d + i) = amp;
  return psi;
}

PureState w_state() {
  PureState psi;
  psi.d = 2;
  psi.amplitudes = ComplexVector::Zero(8);
  const double amp = 1.0 / std::sqrt(3.0);
  psi.amplitudes(1) = amp;  // |001>
  psi.amplitudes(2) = amp;  // |010>
  psi.amplitudes(4) = amp;  // |100>
  return psi;
}

PureState example3_state() {
  PureState psi;
  psi.d = 3;
  psi.amplitudes = ComplexVector::Zero(27);
  const double amp = 1.0 / std::sqrt(3.0);
  psi.amplitudes(0 * 9 + 1 * 3 + 2) = amp;  // |012>
  psi.amplitudes(0 * 9 + 2 * 3 + 1) = amp;  // |021>
  psi.amplitudes(1 * 9 + 1 * 3 + 1) = amp;  // |111>
  return psi;
}

DensityMatrix make_density(int d, ComplexMatrix m) {
  DensityMatrix rho{d, std::move(m)};
  const ValidationReport report = validate(rho);
  if (!report.ok()) {
    std::string what = "density matrix validation failed:";
    if (!report.hermitian_ok)
      what += " hermiticity deviation " + std::to_string(report.hermiticity_error);
    if (!report.trace_ok) what += " trace deviation " + std::to_string(report.trace_error);
    if (report.hermitian_ok && !report.psd_ok)
      what += " min eigenvalue " + std::to_string(report.min_eigenvalue);
    throw std::invalid_argument(what);
  }
  return rho;
}

DensityMatrix isotropic_mix(const PureState& psi, double x) {
  const int dim = cube(psi.d);
  ComplexMatrix m = ((1.0 - x) / dim) * ComplexMatrix::Identity(dim, dim) + x * psi.projector();
  return make_density(psi.d, std::move(m));
}

DensityMatrix ghz_w_mix_unchecked(double x, double y) {
  ComplexMatrix m = ((1.0 - x - y) / 8.0) * ComplexMatrix::Identity(8, 8) +
                    x * ghz(2).projector() + y * w_state().projector();
  return DensityMatrix{2, std::move(m)};
}

DensityMatrix ghz_w_mix(double x, double y) {
  DensityMatrix rho = ghz_w_mix_unchecked(x, y);
  return make_density(2, std::move(rho.matrix));
}

PureState random_pure(int d, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("random_pure: d must be >= 2");
  SplitMix64 rng(mix_seed(seed, 0));
  PureState psi;
  psi.d = d;
  psi.amplitudes = haar_vector(cube(d), rng);
  return psi;
}

PureState random_biseparable_pure(int d, Cut cut, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("random_biseparable_pure: d must be >= 2");
  PureState psi;
  psi.d = d;
  psi.amplitudes = ComplexVector::Zero(cube(d));

  if (cut == Cut::Product) {
    SplitMix64 r1(mix_seed(seed, 1)), r2(mix_seed(seed, 2)), r3(mix_seed(seed, 3));
    const ComplexVector f1 = haar_vector(d, r1);
    const ComplexVector f2 = haar_vector(d, r2);
    const ComplexVector f3 = haar_vector(d, r3);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) psi.amplitudes(a * d * d + b * d + c) = f1(a) * f2(b) * f3(c);
    return psi;
  }

  SplitMix64 rs(mix_seed(seed, 1)), rp(mix_seed(seed, 2));
  const ComplexVector single = haar_vector(d, rs);
  const ComplexVector pair = haar_vector(d * d, rp);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        Complex amp;
        switch (cut) {
          case Cut::P1_23: amp = single(a) * pair(b * d + c); break;
          case Cut::P2_13: amp = single(b) * pair(a * d + c); break;
          case Cut::P3_12: amp = single(c) * pair(a * d + b); break;
          default: amp = 0.0; break;
        }
        psi.amplitudes(a * d * d + b * d + c) = amp;
      }
  return psi;
}

DensityMatrix random_mixed(int d, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("random_mixed: d must be >= 2");
  const int dim = cube(d);
  SplitMix64 rng(mix_seed(seed, 0));
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  // symmetrize away the last bits of floating asymmetry
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix{d, std::move(m)};
}

}  // namespace gme
