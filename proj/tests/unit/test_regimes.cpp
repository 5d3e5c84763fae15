#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "core/gauge_fields.hpp"
#include "core/regimes.hpp"
#include "doctest.h"
#include "property.hpp"

using namespace rydgauge;

TEST_CASE("blockade gauge approaches the general result as r -> 0") {
  for (InteractionKind kind : {InteractionKind::rdd, InteractionKind::vdw})
    for (int sign : {-1, 1})
      for (double d : {-1.0, 0.0, 0.5}) {
        const PairModel m = reduced_model(d, kind, sign);
        const BlockadeCorrespondence map = blockade_correspondence(sign);
        double previous = INFINITY;
        for (double rho : {0.1, 0.05, 0.02}) {
          double dev = 0.0;
          for (int branch : {+1, -1}) {
            const Label l = branch > 0 ? map.eff_plus : map.eff_minus;
            const BlockadeGauge b = blockade_gauge(m, rho, branch);
            CHECK(b.valid);
            const double general = vector_potential(m, l, rho);
            dev = std::max(dev, std::abs(b.A - general) / std::abs(general));
          }
          // vdW reaches roundoff by 0.05 r_c; below that the ordering is noise.
          CHECK((dev < previous || previous < 1e-13));
          previous = dev;
        }
        CHECK(vector_potential(m, map.ee_like, 0.02) == doctest::Approx(-1.0).epsilon(1e-3));
      }
}

TEST_CASE("blockade scalar potential agrees with the general formula deep in blockade") {
  const PairModel m = reduced_model(0.3, InteractionKind::vdw, -1, 100.0);
  const BlockadeCorrespondence map = blockade_correspondence(-1);
  for (int branch : {+1, -1}) {
    const Label l = branch > 0 ? map.eff_plus : map.eff_minus;
    const double general = scalar_potential(m, l, 0.05);
    CHECK(blockade_gauge(m, 0.05, branch).phi == doctest::Approx(general).epsilon(1e-2));
  }
}

TEST_CASE("blockade reports the Delta = 0 singularity") {
  // Delta = V - 4 delta / 3 vanishes where V = 4 delta / 3.
  PairModel m = reduced_model(3.0, InteractionKind::rdd, 1);
  const double rho = std::cbrt(m.lambda() / 4.0);
  CHECK_THROWS_AS(blockade_gauge(m, rho, 1), std::domain_error);
}

TEST_CASE("effective Hamiltonian spectrum matches the blockade eigenvalues") {
  const PairModel m = reduced_model(-0.7, InteractionKind::rdd, -1);
  const BlockadeEffective e = blockade_effective(m, 0.1);
  const Eigen::Matrix3cd h = effective_hamiltonian(m, 0.1);
  CHECK(std::abs((h - h.adjoint()).norm()) < 1e-14);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(h);
  std::array<double, 3> want{e.e0, e.eplus, e.eminus};
  std::sort(want.begin(), want.end());
  for (int k = 0; k < 3; ++k) CHECK(solver.eigenvalues()[k] == doctest::Approx(want[k]).epsilon(1e-12));
}

TEST_CASE("weak expansion residual is second order in V") {
  for (InteractionKind kind : {InteractionKind::rdd, InteractionKind::vdw})
    for (double d : {-2.0, -0.5, 1.0})
      for (Label l : all_labels) {
        const PairModel m = reduced_model(d, kind, -1);
        const double rho = kind == InteractionKind::rdd ? 20.0 : 3.0;
        auto residual = [&](double r) { return std::abs(vector_potential(m, l, r) - weak_expansion(d, l, m.shift(r))); };
        const double ratio = residual(rho) / residual(rho * std::pow(2.0, 1.0 / m.power()));
        CHECK(ratio == doctest::Approx(4.0).epsilon(0.1));
      }
}

TEST_CASE("weak expansion at V = 0 is the single-atom result") {
  for (double d : {-2.0, 0.0, 1.5}) {
    CHECK(weak_expansion(d, Label::one, 0.0) == doctest::Approx(single_atom_gauge(d, +1).A.z()));
    CHECK(weak_expansion(d, Label::plus, 0.0) == doctest::Approx(single_atom_gauge(d, -1).A.z()));
    CHECK(weak_expansion(d, Label::minus, 0.0) == doctest::Approx(-0.5));
  }
}

TEST_CASE("antiblockade distances") {
  const PairModel m = reduced_model(2.0, InteractionKind::rdd, 1);
  const AntiblockadeDistances a = antiblockade_distances(m);
  REQUIRE(a.single_photon);
  REQUIRE(a.two_photon);
  CHECK(m.shift(*a.single_photon) == doctest::Approx(2.0));
  CHECK(m.shift(*a.two_photon) == doctest::Approx(4.0));
  CHECK(*a.two_photon < *a.single_photon);

  const AntiblockadeDistances none = antiblockade_distances(reduced_model(2.0, InteractionKind::rdd, -1));
  CHECK_FALSE(none.single_photon);
  CHECK_FALSE(none.reason.empty());
  CHECK_FALSE(antiblockade_distances(reduced_model(0.0, InteractionKind::vdw, 1)).two_photon);
}
