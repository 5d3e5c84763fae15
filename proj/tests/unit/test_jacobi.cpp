#include <Eigen/Eigenvalues>

#include "core/jacobi.hpp"
#include "doctest.h"
#include "property.hpp"

using namespace rydgauge;

namespace {

Eigen::MatrixXcd random_hermitian(prop::Gen& g, int n, double scale) {
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = g.uniform(-scale, scale);
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = std::complex<double>(g.uniform(-scale, scale), g.uniform(-scale, scale));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("jacobi agrees with Eigen's self-adjoint solver") {
  prop::for_all(500, 11, [](prop::Gen& g) -> std::string {
    const int n = 2 + g.pick(5);
    const Eigen::MatrixXcd m = random_hermitian(g, n, g.log_uniform(1e-2, 1e3));
    const HermitianEigen mine = jacobi_eigen(m);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(m);
    const double scale = std::max(1.0, m.norm());
    for (int k = 0; k < n; ++k)
      if (std::abs(mine.values[k] - ref.eigenvalues()[k]) > 1e-12 * scale) return "eigenvalue mismatch";
    const Eigen::MatrixXcd v = mine.vectors;
    if ((v.adjoint() * v - Eigen::MatrixXcd::Identity(n, n)).norm() > 1e-12) return "not orthonormal";
    if ((m * v - v * mine.values.asDiagonal()).norm() > 1e-11 * scale) return "residual too large";
    return {};
  });
}

TEST_CASE("jacobi handles exact degeneracy and diagonal input") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4) * 2.0;
  const HermitianEigen e = jacobi_eigen(m);
  for (int k = 0; k < 4; ++k) CHECK(e.values[k] == doctest::Approx(2.0));
  m(1, 1) = -1.0;
  const HermitianEigen d = jacobi_eigen(m);
  CHECK(d.values[0] == doctest::Approx(-1.0));
}

TEST_CASE("jacobi rejects non-Hermitian input") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK(hermiticity_residual(m) > 0.5);
  CHECK_THROWS_AS(jacobi_eigen(m), std::invalid_argument);
}
