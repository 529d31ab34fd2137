#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <vector>

namespace gme {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

/// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr(a·b) computed as a sum over entry pairs, without forming the product.
/// Throws std::invalid_argument on dimension mismatch.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of a tripartite operator.
///
/// `dims` are the three factor dimensions in tensor order (party 1 is the
/// leftmost factor); `keep` lists the parties (1-based) whose marginal is
/// returned, in ascending order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::array<int, 3>& dims,
                            const std::vector<int>& keep);

/// Singular values in decreasing order; min(rows, cols) of them.
RealVector singular_values(const RealMatrix& m);

/// Eigenvalues of a Hermitian matrix, ascending. Throws if the input is not
/// Hermitian within 1e-10.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace gme
