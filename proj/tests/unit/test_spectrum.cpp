#include <algorithm>
#include <cmath>

#include "core/spectrum.hpp"
#include "doctest.h"
#include "property.hpp"

using namespace rydgauge;

namespace {

PairConfiguration along(const Vec3& dir, double rho) {
  PairConfiguration c;
  c.position_b = Vec3(0.2, -0.1, 0.05);
  c.position_a = c.position_b + rho * dir.normalized();
  return c;
}

}  // namespace

TEST_CASE("labels parse and print") {
  for (Label l : all_labels) CHECK(parse_label(to_string(l)) == l);
  CHECK(parse_label("plus") == Label::plus);
  CHECK_THROWS_AS(parse_label("2"), std::invalid_argument);
}

TEST_CASE("closed-form spectrum matches numeric diagonalization") {
  prop::for_all(2000, 7, [](prop::Gen& g) -> std::string {
    const double d = g.uniform(-5.0, 5.0);
    const PairModel m = reduced_model(d, g.coin() ? InteractionKind::rdd : InteractionKind::vdw, g.coin() ? 1 : -1, 3.0);
    const double rho = g.log_uniform(0.3, 30.0);
    const PairConfiguration c = along(Vec3(g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1)), rho);
    const Spectrum s = eigenvalues_analytic(1.0, d, m.shift(rho));
    std::array<double, 4> closed{s.e0, s.e1, s.eplus, s.eminus};
    std::sort(closed.begin(), closed.end());
    const std::array<double, 4> numeric = eigenvalues_numeric(build_hamiltonian(m, c));
    for (int k = 0; k < 4; ++k)
      if (std::abs(closed[k] - numeric[k]) > 1e-10 * std::max(1.0, std::abs(numeric[k])))
        return "eigenvalue " + std::to_string(k) + " differs";
    return {};
  });
}

TEST_CASE("label rule at V = delta = 0") {
  const Spectrum s = eigenvalues_analytic(1.0, 0.0, 0.0);
  CHECK(s.e1 == doctest::Approx(1.0));
  CHECK(s.eplus == doctest::Approx(-1.0));
  CHECK(s.eminus == doctest::Approx(0.0));
}

TEST_CASE("labels follow continuously along r") {
  // No label should jump between neighbouring grid points.
  for (InteractionKind kind : {InteractionKind::rdd, InteractionKind::vdw})
    for (double d : {-2.0, 0.0, 1.5}) {
      const PairModel m = reduced_model(d, kind, -1);
      Spectrum prev = eigenvalues_analytic(1.0, d, m.shift(0.2));
      for (double rho = 0.2 * 1.01; rho < 10.0; rho *= 1.01) {
        const Spectrum s = eigenvalues_analytic(1.0, d, m.shift(rho));
        for (Label l : all_labels) CHECK(std::abs(s.energy(l) - prev.energy(l)) < 0.5 + 0.1 * std::abs(prev.energy(l)));
        prev = s;
      }
    }
}

TEST_CASE("ladder states are normalized eigenvectors") {
  prop::for_all(1000, 9, [](prop::Gen& g) -> std::string {
    const double d = g.uniform(-5.0, 5.0);
    const PairModel m = reduced_model(d, g.coin() ? InteractionKind::rdd : InteractionKind::vdw, g.coin() ? 1 : -1);
    const double rho = g.log_uniform(0.05, 50.0);
    const double v = m.shift(rho);
    for (Label l : all_labels) {
      const LadderState s = ladder_state(m, rho, l);
      const double norm = s.ce * s.ce + s.cplus * s.cplus + s.cg * s.cg;
      if (std::abs(norm - 1.0) > 1e-12) return "not normalized";
      // Rows of the real 3x3 ladder block {ee, psi+, gg}.
      const double sq2 = std::sqrt(2.0);
      const double r1 = (v - d) * s.ce + s.cplus / sq2 - s.energy * s.ce;
      const double r2 = (s.ce + s.cg) / sq2 - s.energy * s.cplus;
      const double r3 = s.cplus / sq2 + d * s.cg - s.energy * s.cg;
      const double scale = std::max({1.0, std::abs(v), std::abs(d)});
      if (std::hypot(r1, r2, r3) > 1e-10 * scale) return "residual for label " + std::string(to_string(l));
    }
    return {};
  });
}

TEST_CASE("eigensystem vectors are orthonormal and solve H") {
  const PairModel m = reduced_model(-1.3, InteractionKind::vdw, -1, 5.0);
  const PairConfiguration c = along(Vec3(0.3, 0.4, 0.87), 0.9);
  const Eigen::Matrix4cd h = build_hamiltonian(m, c);
  Eigen::Matrix<std::complex<double>, 4, 3> vs;
  for (int k = 0; k < 3; ++k) {
    const EigenState e = eigensystem(m, c, all_labels[k]);
    vs.col(k) = e.coefficients;
    CHECK((h * e.coefficients - e.energy * e.coefficients).norm() < 1e-12);
  }
  CHECK((vs.adjoint() * vs - Eigen::Matrix3cd::Identity()).norm() < 1e-12);
}

TEST_CASE("product-basis state matches the product Hamiltonian") {
  const PairModel m = reduced_model(0.7, InteractionKind::rdd, 1, 4.0);
  const PairConfiguration c = along(Vec3(-0.2, 0.5, 0.4), 1.3);
  const Eigen::Matrix4cd h = build_product_hamiltonian(m, c);
  for (Label l : all_labels) {
    const Eigen::Vector4cd psi = product_state(m, c, l);
    const double e = eigensystem(m, c, l).energy;
    CHECK(std::abs(psi.norm() - 1.0) < 1e-13);
    CHECK((h * psi - e * psi).norm() < 1e-12);
  }
  CHECK(std::abs(psi_minus_product(m, c).dot(product_state(m, c, Label::plus))) < 1e-13);
}

TEST_CASE("huge interaction keeps small roots resolved") {
  // Near rho = 0.02 for vdW, |V| ~ 1e10 while the two small roots differ by O(1).
  const double v = -1.0 / std::pow(0.02, 6);
  const Spectrum s = eigenvalues_analytic(1.0, 0.0, v);
  std::array<double, 3> e{s.e1, s.eplus, s.eminus};
  std::sort(e.begin(), e.end());
  CHECK(e[0] / v == doctest::Approx(1.0));
  CHECK(std::abs(e[1] + 1.0 / std::sqrt(2.0)) < 1e-9);
  CHECK(std::abs(e[2] - 1.0 / std::sqrt(2.0)) < 1e-9);
}
