#include "gme/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <stdexcept>

namespace gme {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("trace_product: matrices must be square of equal dimension");
  // tr(ab) = sum_ij a_ij b_ji
  return (a.array() * b.transpose().array()).sum();
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::array<int, 3>& dims,
                            const std::vector<int>& keep) {
  const int total = dims[0] * dims[1] * dims[2];
  if (rho.rows() != total || rho.cols() != total)
    throw std::invalid_argument("partial_trace: matrix dimension does not match dims");

  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (kept.empty() || std::unique(kept.begin(), kept.end()) != kept.end())
    throw std::invalid_argument("partial_trace: keep must be a nonempty set");
  for (int p : kept)
    if (p < 1 || p > 3) throw std::invalid_argument("partial_trace: parties are 1..3");

  std::vector<int> traced;
  for (int p = 1; p <= 3; ++p)
    if (std::find(kept.begin(), kept.end(), p) == kept.end()) traced.push_back(p);

  const std::array<int, 3> stride = {dims[1] * dims[2], dims[2], 1};
  int dim_keep = 1, dim_trace = 1;
  for (int p : kept) dim_keep *= dims[p - 1];
  for (int p : traced) dim_trace *= dims[p - 1];

  // flat kept/traced index -> contribution to the full flat index
  auto offset = [&](const std::vector<int>& parties, int flat) {
    int off = 0;
    for (auto it = parties.rbegin(); it != parties.rend(); ++it) {
      const int dp = dims[*it - 1];
      off += (flat % dp) * stride[*it - 1];
      flat /= dp;
    }
    return off;
  };

  ComplexMatrix out = ComplexMatrix::Zero(dim_keep, dim_keep);
  for (int r = 0; r < dim_keep; ++r) {
    const int ro = offset(kept, r);
    for (int c = 0; c < dim_keep; ++c) {
      const int co = offset(kept, c);
      Complex sum = 0.0;
      for (int t = 0; t < dim_trace; ++t) {
        const int to = offset(traced, t);
        sum += rho(ro + to, co + to);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

RealVector singular_values(const RealMatrix& m) {
  Eigen::JacobiSVD<RealMatrix> svd(m);
  return svd.singularValues();
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-10)
    throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian (deviation " +
                                std::to_string(dev) + ")");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace gme
