#include "gme/bloch.hpp"
#include "gme/rng.hpp"
#include "gme/states.hpp"
#include "gme/su_basis.hpp"

#include <doctest.h>

using namespace gme;

namespace {

// Independent oracle: every tensor entry as an explicit Kronecker trace.
CorrelationData tensors_by_direct_trace(const DensityMatrix& rho, const GeneratorBasis& basis) {
  const int d = basis.d;
  const int n = d * d - 1;
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  CorrelationData data;
  data.d = d;
  data.t1 = RealVector::Zero(n);
  data.t2 = RealVector::Zero(n);
  data.t3 = RealVector::Zero(n);
  data.t12 = RealMatrix::Zero(n, n);
  data.t13 = RealMatrix::Zero(n, n);
  data.t23 = RealMatrix::Zero(n, n);
  data.t123.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  const auto& g = basis.generators;
  for (int i = 0; i < n; ++i) {
    data.t1(i) = trace_product(rho.matrix, kron(kron(g[i], id), id)).real();
    data.t2(i) = trace_product(rho.matrix, kron(kron(id, g[i]), id)).real();
    data.t3(i) = trace_product(rho.matrix, kron(kron(id, id), g[i])).real();
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      data.t12(i, j) = trace_product(rho.matrix, kron(kron(g[i], g[j]), id)).real();
      data.t13(i, j) = trace_product(rho.matrix, kron(kron(g[i], id), g[j])).real();
      data.t23(i, j) = trace_product(rho.matrix, kron(kron(id, g[i]), g[j])).real();
      for (int k = 0; k < n; ++k)
        data.cube(i, j, k) = trace_product(rho.matrix, kron(kron(g[i], g[j]), g[k])).real();
    }
  return data;
}

}  // namespace

TEST_CASE("maximally mixed state has vanishing tensors") {
  const GeneratorBasis basis = gellmann_basis(2);
  const DensityMatrix rho{2, ComplexMatrix::Identity(8, 8) / 8.0};
  const CorrelationData data = correlation_tensors(rho, basis);
  CHECK(data.single_norm_sq() < 1e-24);
  CHECK(data.pair_norm_sq() < 1e-24);
  CHECK(data.triple_norm_sq() < 1e-24);
}

TEST_CASE("GHZ2 tensors match the 27-triple trace oracle") {
  const GeneratorBasis basis = gellmann_basis(2);
  const DensityMatrix rho{2, ghz(2).projector()};
  const CorrelationData data = correlation_tensors(rho, basis);
  const CorrelationData oracle = tensors_by_direct_trace(rho, basis);

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(data.cube(i, j, k) == doctest::Approx(oracle.cube(i, j, k)).epsilon(1e-12));

  // basis order: 0 = x, 1 = y, 2 = z
  CHECK(data.cube(0, 0, 0) == doctest::Approx(1.0));
  CHECK(data.cube(0, 1, 1) == doctest::Approx(-1.0));
  CHECK(data.cube(1, 0, 1) == doctest::Approx(-1.0));
  CHECK(data.cube(1, 1, 0) == doctest::Approx(-1.0));
  CHECK(data.cube(2, 2, 2) == doctest::Approx(0.0));
  CHECK(data.triple_norm() == doctest::Approx(2.0).epsilon(1e-12));

  CHECK(data.t12(2, 2) == doctest::Approx(1.0));
  CHECK(data.t1.norm() < 1e-12);
  CHECK(data.t2.norm() < 1e-12);
  CHECK(data.t3.norm() < 1e-12);
}

TEST_CASE("random states match the trace oracle entrywise") {
  for (int d : {2, 3}) {
    const GeneratorBasis basis = gellmann_basis(d);
    const DensityMatrix rho = random_mixed(d, 31 + d);
    const CorrelationData data = correlation_tensors(rho, basis);
    const CorrelationData oracle = tensors_by_direct_trace(rho, basis);
    const int n = d * d - 1;
    double worst = (data.t12 - oracle.t12).cwiseAbs().maxCoeff();
    worst = std::max(worst, (data.t13 - oracle.t13).cwiseAbs().maxCoeff());
    worst = std::max(worst, (data.t23 - oracle.t23).cwiseAbs().maxCoeff());
    worst = std::max(worst, (data.t1 - oracle.t1).cwiseAbs().maxCoeff());
    worst = std::max(worst, (data.t2 - oracle.t2).cwiseAbs().maxCoeff());
    worst = std::max(worst, (data.t3 - oracle.t3).cwiseAbs().maxCoeff());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          worst = std::max(worst, std::abs(data.cube(i, j, k) - oracle.cube(i, j, k)));
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("reconstruction round trips") {
  for (int d : {2, 3}) {
    const GeneratorBasis basis = gellmann_basis(d);
    SUBCASE("mixed") {
      const DensityMatrix rho = random_mixed(d, 77 + d);
      const DensityMatrix back = reconstruct(correlation_tensors(rho, basis), basis);
      CHECK((back.matrix - rho.matrix).cwiseAbs().maxCoeff() < 1e-10);
    }
    SUBCASE("ghz projector") {
      const DensityMatrix rho{d, ghz(d).projector()};
      const DensityMatrix back = reconstruct(correlation_tensors(rho, basis), basis);
      CHECK((back.matrix - rho.matrix).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("all-zero tensors reconstruct to the maximally mixed state") {
  const GeneratorBasis basis = gellmann_basis(3);
  CorrelationData data;
  data.d = 3;
  data.t1 = data.t2 = data.t3 = RealVector::Zero(8);
  data.t12 = data.t13 = data.t23 = RealMatrix::Zero(8, 8);
  data.t123.assign(512, 0.0);
  const DensityMatrix rho = reconstruct(data, basis);
  CHECK((rho.matrix - ComplexMatrix::Identity(27, 27) / 27.0).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("unfoldings preserve the entry multiset") {
  const GeneratorBasis basis = gellmann_basis(3);
  const DensityMatrix rho = random_mixed(3, 4);
  const CorrelationData data = correlation_tensors(rho, basis);
  const double norm = data.triple_norm();
  for (Cut cut : {Cut::P1_23, Cut::P2_13, Cut::P3_12}) {
    const RealMatrix m = unfold(data, cut);
    CHECK(m.rows() == 8);
    CHECK(m.cols() == 64);
    CHECK(m.norm() == doctest::Approx(norm).epsilon(1e-12));
  }
  // entry placement, cut 1|23: (i, n(j-1)+k)
  CHECK(unfold(data, Cut::P1_23)(2, 3 * 8 + 5) == data.cube(2, 3, 5));
  CHECK(unfold(data, Cut::P2_13)(3, 2 * 8 + 5) == data.cube(2, 3, 5));
  CHECK(unfold(data, Cut::P3_12)(5, 2 * 8 + 3) == data.cube(2, 3, 5));
}

TEST_CASE("GHZ2 unfolding spectrum against the MM^T eigen-oracle") {
  const GeneratorBasis basis = gellmann_basis(2);
  const CorrelationData data = correlation_tensors(DensityMatrix{2, ghz(2).projector()}, basis);
  const RealMatrix m = unfold(data, Cut::P1_23);
  const RealVector sv = singular_values(m);
  // spectrum (sqrt2, sqrt2, 0): Frobenius norm 2, Ky Fan full norm 2*sqrt2
  CHECK(sv(0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(sv(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(sv(2) < 1e-12);

  // eigenvalues of MM^T are the squared singular values
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(m * m.transpose());
  RealVector lam = solver.eigenvalues();
  for (int i = 0; i < sv.size(); ++i)
    CHECK(sv(i) * sv(i) == doctest::Approx(lam(sv.size() - 1 - i)).epsilon(1e-10));
}

TEST_CASE("reduced purities: matrix route vs closed form") {
  const GeneratorBasis basis2 = gellmann_basis(2);
  SUBCASE("maximally mixed") {
    const DensityMatrix rho{2, ComplexMatrix::Identity(8, 8) / 8.0};
    const Purities p = reduced_purities(rho);
    CHECK(p.p1 == doctest::Approx(0.5));
    CHECK(p.p23 == doctest::Approx(0.25));
  }
  SUBCASE("ghz and w") {
    CHECK(reduced_purities(DensityMatrix{2, ghz(2).projector()}).p1 == doctest::Approx(0.5));
    CHECK(reduced_purities(DensityMatrix{2, w_state().projector()}).p1 ==
          doctest::Approx(5.0 / 9.0));
  }
  SUBCASE("random states, d = 2 and 3") {
    for (int d : {2, 3}) {
      const GeneratorBasis basis = gellmann_basis(d);
      for (int t = 0; t < 20; ++t) {
        const DensityMatrix rho = random_mixed(d, mix_seed(500 + d, t));
        const Purities direct = reduced_purities(rho);
        const Purities closed = closed_form_purities(correlation_tensors(rho, basis));
        CHECK(direct.p1 == doctest::Approx(closed.p1).epsilon(1e-10));
        CHECK(direct.p2 == doctest::Approx(closed.p2).epsilon(1e-10));
        CHECK(direct.p3 == doctest::Approx(closed.p3).epsilon(1e-10));
        CHECK(direct.p23 == doctest::Approx(closed.p23).epsilon(1e-10));
        CHECK(direct.p13 == doctest::Approx(closed.p13).epsilon(1e-10));
        CHECK(direct.p12 == doctest::Approx(closed.p12).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("tensor norm bounds hold on valid states") {
  for (int d : {2, 3}) {
    const GeneratorBasis basis = gellmann_basis(d);
    const double single_bound = std::sqrt(2.0 * (d - 1.0) / d) + 1e-9;
    const double pair_bound = 2.0 * std::sqrt((d * d - 1.0) / (d * d)) + 1e-9;
    for (int t = 0; t < 50; ++t) {
      const PureState psi = random_pure(d, mix_seed(900 + d, t));
      const CorrelationData data = correlation_tensors(DensityMatrix{d, psi.projector()}, basis);
      CHECK(data.t1.norm() <= single_bound);
      CHECK(data.t2.norm() <= single_bound);
      CHECK(data.t3.norm() <= single_bound);
      CHECK(data.t12.norm() <= pair_bound);
      CHECK(data.t13.norm() <= pair_bound);
      CHECK(data.t23.norm() <= pair_bound);
    }
  }
}

TEST_CASE("mixture tensors are convex combinations of component tensors") {
  const GeneratorBasis basis = gellmann_basis(2);
  const CorrelationData tg = correlation_tensors(DensityMatrix{2, ghz(2).projector()}, basis);
  const CorrelationData tw = correlation_tensors(DensityMatrix{2, w_state().projector()}, basis);
  const CorrelationData mix = correlation_tensors(ghz_w_mix(0.3, 0.5), basis);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(mix.cube(i, j, k) ==
              doctest::Approx(0.3 * tg.cube(i, j, k) + 0.5 * tw.cube(i, j, k)).epsilon(1e-12));
}
