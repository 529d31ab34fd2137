#include "gme/bloch.hpp"

#include <cmath>
#include <stdexcept>

namespace gme {

namespace {

constexpr double kImagTolerance = 1e-12;

double real_checked(const Complex& z, double scale) {
  if (std::abs(z.imag()) > kImagTolerance * std::max(1.0, scale))
    throw std::runtime_error("correlation_tensors: imaginary residue " +
                             std::to_string(z.imag()));
  return z.real();
}

// Contracts one factor of a two-factor operator X on C^d ⊗ C^d with a
// generator: U[c,c'] = sum_{b,b'} X[(b c),(b' c')] g[b',b].
ComplexMatrix contract_first(const ComplexMatrix& x, const ComplexMatrix& g, int d) {
  ComplexMatrix u = ComplexMatrix::Zero(d, d);
  for (int b = 0; b < d; ++b)
    for (int bp = 0; bp < d; ++bp) {
      const Complex w = g(bp, b);
      if (w == Complex(0.0, 0.0)) continue;
      for (int c = 0; c < d; ++c)
        for (int cp = 0; cp < d; ++cp) u(c, cp) += x(b * d + c, bp * d + cp) * w;
    }
  return u;
}

// tr(Y g) for d x d matrices.
Complex small_trace_product(const ComplexMatrix& y, const ComplexMatrix& g, int d) {
  Complex sum = 0.0;
  for (int c = 0; c < d; ++c)
    for (int cp = 0; cp < d; ++cp) sum += y(c, cp) * g(cp, c);
  return sum;
}

}  // namespace

double CorrelationData::single_norm_sq() const {
  return t1.squaredNorm() + t2.squaredNorm() + t3.squaredNorm();
}

double CorrelationData::pair_norm_sq() const {
  return t12.squaredNorm() + t13.squaredNorm() + t23.squaredNorm();
}

double CorrelationData::triple_norm_sq() const {
  double s = 0.0;
  for (double v : t123) s += v * v;
  return s;
}

double CorrelationData::triple_norm() const { return std::sqrt(triple_norm_sq()); }

CorrelationData correlation_tensors(const DensityMatrix& rho, const GeneratorBasis& basis) {
  const int d = basis.d;
  const int n = d * d - 1;
  if (rho.d != d || rho.matrix.rows() != d * d * d)
    throw std::invalid_argument("correlation_tensors: basis/state dimension mismatch");

  CorrelationData data;
  data.d = d;
  data.t1 = RealVector::Zero(n);
  data.t2 = RealVector::Zero(n);
  data.t3 = RealVector::Zero(n);
  data.t12 = RealMatrix::Zero(n, n);
  data.t13 = RealMatrix::Zero(n, n);
  data.t23 = RealMatrix::Zero(n, n);
  data.t123.assign(static_cast<std::size_t>(n) * n * n, 0.0);

  const std::array<int, 3> dims = {d, d, d};
  const int dd = d * d;

  // Party 1 contracted with each generator: S_i acts on parties 2,3.
  // t1_i = tr S_i; t12_ij, t13_ik, t123_ijk follow from S_i by the
  // bipartite contractions below.
  for (int i = 0; i < n; ++i) {
    const ComplexMatrix& gi = basis.generators[i];
    ComplexMatrix s = ComplexMatrix::Zero(dd, dd);
    for (int a = 0; a < d; ++a)
      for (int ap = 0; ap < d; ++ap) {
        const Complex w = gi(ap, a);
        if (w == Complex(0.0, 0.0)) continue;
        for (int bc = 0; bc < dd; ++bc)
          for (int bpcp = 0; bpcp < dd; ++bpcp)
            s(bc, bpcp) += rho.matrix(a * dd + bc, ap * dd + bpcp) * w;
      }

    data.t1(i) = real_checked(s.trace(), 1.0);

    // trace out party 2 of S_i -> operator on party 3
    ComplexMatrix y = ComplexMatrix::Zero(d, d);
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int cp = 0; cp < d; ++cp) y(c, cp) += s(b * d + c, b * d + cp);
    for (int k = 0; k < n; ++k)
      data.t13(i, k) = real_checked(small_trace_product(y, basis.generators[k], d), 1.0);

    for (int j = 0; j < n; ++j) {
      const ComplexMatrix u = contract_first(s, basis.generators[j], d);
      data.t12(i, j) = real_checked(u.trace(), 1.0);
      for (int k = 0; k < n; ++k)
        data.cube(i, j, k) = real_checked(small_trace_product(u, basis.generators[k], d), 1.0);
    }
  }

  // Remaining tensors from the 2,3 marginal.
  const ComplexMatrix rho23 = partial_trace(rho.matrix, dims, {2, 3});
  ComplexMatrix y3 = ComplexMatrix::Zero(d, d);
  for (int b = 0; b < d; ++b)
    for (int c = 0; c < d; ++c)
      for (int cp = 0; cp < d; ++cp) y3(c, cp) += rho23(b * d + c, b * d + cp);
  for (int k = 0; k < n; ++k)
    data.t3(k) = real_checked(small_trace_product(y3, basis.generators[k], d), 1.0);
  for (int j = 0; j < n; ++j) {
    const ComplexMatrix u = contract_first(rho23, basis.generators[j], d);
    data.t2(j) = real_checked(u.trace(), 1.0);
    for (int k = 0; k < n; ++k)
      data.t23(j, k) = real_checked(small_trace_product(u, basis.generators[k], d), 1.0);
  }

  return data;
}

DensityMatrix reconstruct(const CorrelationData& data, const GeneratorBasis& basis) {
  const int d = basis.d;
  if (data.d != d) throw std::invalid_argument("reconstruct: basis/data dimension mismatch");
  const int n = d * d - 1;
  const int dim = d * d * d;
  const int dd = d * d;

  ComplexMatrix out = (1.0 / dim) * ComplexMatrix::Identity(dim, dim);

  auto add_term = [&](double weight, const ComplexMatrix* g1, const ComplexMatrix* g2,
                      const ComplexMatrix* g3) {
    if (weight == 0.0) return;
    for (int a = 0; a < d; ++a)
      for (int ap = 0; ap < d; ++ap) {
        const Complex f1 = g1 ? (*g1)(a, ap) : (a == ap ? Complex(1.0) : Complex(0.0));
        if (f1 == Complex(0.0, 0.0)) continue;
        for (int b = 0; b < d; ++b)
          for (int bp = 0; bp < d; ++bp) {
            const Complex f2 = g2 ? (*g2)(b, bp) : (b == bp ? Complex(1.0) : Complex(0.0));
            if (f2 == Complex(0.0, 0.0)) continue;
            const Complex f12 = weight * f1 * f2;
            for (int c = 0; c < d; ++c)
              for (int cp = 0; cp < d; ++cp) {
                const Complex f3 = g3 ? (*g3)(c, cp) : (c == cp ? Complex(1.0) : Complex(0.0));
                if (f3 == Complex(0.0, 0.0)) continue;
                out(a * dd + b * d + c, ap * dd + bp * d + cp) += f12 * f3;
              }
          }
      }
  };

  const double w1 = 1.0 / (2.0 * dd);
  const double w2 = 1.0 / (4.0 * d);
  const double w3 = 1.0 / 8.0;
  const auto& g = basis.generators;

  for (int i = 0; i < n; ++i) {
    add_term(w1 * data.t1(i), &g[i], nullptr, nullptr);
    add_term(w1 * data.t2(i), nullptr, &g[i], nullptr);
    add_term(w1 * data.t3(i), nullptr, nullptr, &g[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add_term(w2 * data.t12(i, j), &g[i], &g[j], nullptr);
      add_term(w2 * data.t13(i, j), &g[i], nullptr, &g[j]);
      add_term(w2 * data.t23(i, j), nullptr, &g[i], &g[j]);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) add_term(w3 * data.cube(i, j, k), &g[i], &g[j], &g[k]);

  return DensityMatrix{d, std::move(out)};
}

RealMatrix unfold(const CorrelationData& data, Cut cut) {
  const int n = data.n();
  RealMatrix m(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double v = data.cube(i, j, k);
        switch (cut) {
          case Cut::P1_23: m(i, j * n + k) = v; break;
          case Cut::P2_13: m(j, i * n + k) = v; break;
          case Cut::P3_12: m(k, i * n + j) = v; break;
          default: throw std::invalid_argument("unfold: cut must single out one party");
        }
      }
  return m;
}

Purities reduced_purities(const DensityMatrix& rho) {
  const int d = rho.d;
  const std::array<int, 3> dims = {d, d, d};
  auto purity = [&](const std::vector<int>& keep) {
    return partial_trace(rho.matrix, dims, keep).squaredNorm();
  };
  Purities p{};
  p.p1 = purity({1});
  p.p2 = purity({2});
  p.p3 = purity({3});
  p.p23 = purity({2, 3});
  p.p13 = purity({1, 3});
  p.p12 = purity({1, 2});
  return p;
}

Purities closed_form_purities(const CorrelationData& data) {
  const double d = data.d;
  const double a1 = data.t1.squaredNorm();
  const double a2 = data.t2.squaredNorm();
  const double a3 = data.t3.squaredNorm();
  Purities p{};
  p.p1 = 1.0 / d + 0.5 * a1;
  p.p2 = 1.0 / d + 0.5 * a2;
  p.p3 = 1.0 / d + 0.5 * a3;
  p.p23 = 1.0 / (d * d) + (a2 + a3) / (2.0 * d) + 0.25 * data.t23.squaredNorm();
  p.p13 = 1.0 / (d * d) + (a1 + a3) / (2.0 * d) + 0.25 * data.t13.squaredNorm();
  p.p12 = 1.0 / (d * d) + (a1 + a2) / (2.0 * d) + 0.25 * data.t12.squaredNorm();
  return p;
}

}  // namespace gme
