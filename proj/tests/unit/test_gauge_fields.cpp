#include <algorithm>
#include <cmath>

#include "core/gauge_fields.hpp"
#include "core/oracles.hpp"
#include "doctest.h"
#include "property.hpp"

using namespace rydgauge;

namespace {

PairConfiguration oblique(double rho) {
  PairConfiguration c;
  c.position_b = Vec3(-0.03, 0.02, 0.01);
  c.position_a = c.position_b + rho * Vec3(0.36, 0.48, 0.8);
  return c;
}

PairModel random_model(prop::Gen& g, double kappa = 50.0) {
  return reduced_model(g.uniform(-3.0, 3.0), g.coin() ? InteractionKind::rdd : InteractionKind::vdw,
                       g.coin() ? 1 : -1, kappa);
}

}  // namespace

TEST_CASE("single-atom gauge potentials") {
  const SingleAtomGauge up = single_atom_gauge(0.0, +1), dn = single_atom_gauge(0.0, -1);
  CHECK(up.A.z() == doctest::Approx(-0.5));
  CHECK(dn.A.z() == doctest::Approx(-0.5));
  CHECK(up.phi == doctest::Approx(0.25));
  CHECK(up.B.norm() == 0.0);
  // Far detuned: the two branches split into "carries the photon" and "carries nothing".
  CHECK(single_atom_gauge(-50.0, +1).A.z() == doctest::Approx(-1.0).epsilon(1e-3));
  CHECK(std::abs(single_atom_gauge(-50.0, -1).A.z()) < 1e-3);
}

TEST_CASE("vector potential sum rule over the three ladder states") {
  // The ladder block holds one ee, one psi+ and one gg in total: sum of -(ce^2 + cplus^2/2) is -3/2.
  prop::for_all(500, 21, [](prop::Gen& g) -> std::string {
    const PairModel m = random_model(g);
    const double rho = g.log_uniform(0.05, 20.0);
    double sum = 0.0;
    for (Label l : all_labels) sum += vector_potential(m, l, rho);
    return std::abs(sum + 1.5) < 1e-12 ? "" : "sum != -3/2";
  });
}

TEST_CASE("closed-form A agrees with the Berry-connection oracle") {
  prop::for_all(200, 23, [](prop::Gen& g) -> std::string {
    const PairModel m = random_model(g);
    const double rho = g.log_uniform(0.2, 5.0);
    const Label l = all_labels[g.pick(3)];
    if (sample_flagged(m, rho)) return {};
    const oracle::BerryResult b = oracle::berry_connection_fd(m, l, oblique(rho));
    const Vec3 closed = vector_potential_vector(m, l, rho);
    return (b.A - closed).norm() < 1e-6 * closed.norm() ? "" : "Berry connection mismatch";
  });
}

TEST_CASE("closed-form phi agrees with the overlap oracle and is non-negative") {
  prop::for_all(200, 25, [](prop::Gen& g) -> std::string {
    const PairModel m = random_model(g);
    const double rho = g.log_uniform(0.2, 5.0);
    const Label l = all_labels[g.pick(3)];
    const double closed = scalar_potential(m, l, rho);
    if (closed < 0.0) return "negative phi";
    const double fd = oracle::scalar_potential_fd(m, l, oblique(rho));
    return std::abs(fd - closed) < 1e-6 * std::max(closed, 1e-6) ? "" : "phi mismatch";
  });
}

TEST_CASE("perturbative B_phi matches Richardson differentiation of A") {
  prop::for_all(300, 27, [](prop::Gen& g) -> std::string {
    const PairModel m = random_model(g);
    const double rho = g.log_uniform(0.1, 10.0);
    const Label l = all_labels[g.pick(3)];
    const double a = b_phi(m, l, rho), f = b_phi_fd(m, l, rho);
    return std::abs(a - f) < 1e-6 * (1e-2 + std::abs(a)) ? "" : "B_phi mismatch";
  });
}

TEST_CASE("energy derivative is Hellmann-Feynman") {
  const PairModel m = reduced_model(0.4, InteractionKind::vdw, -1);
  for (double rho : {0.5, 1.0, 2.0})
    for (Label l : all_labels) {
      const double h = 1e-6;
      auto e = [&](double r) { return eigenvalues_analytic(1.0, m.detuning, m.shift(r)).energy(l); };
      CHECK(energy_derivative(m, l, rho) == doctest::Approx((e(rho + h) - e(rho - h)) / (2 * h)).epsilon(1e-6));
    }
}

TEST_CASE("magnetic field is azimuthal and antisymmetric between the atoms") {
  prop::for_all(300, 29, [](prop::Gen& g) -> std::string {
    const PairModel m = random_model(g);
    const Vec3 r(g.uniform(-2, 2), g.uniform(-2, 2), g.uniform(-2, 2));
    if (r.norm() < 0.05) return {};
    const Label l = all_labels[g.pick(3)];
    const Vec3 ba = magnetic_field(m, l, r, Atom::a), bb = magnetic_field(m, l, r, Atom::b);
    if ((ba + bb).norm() > 1e-12) return "B_a != -B_b";
    if (std::abs(ba.dot(r)) > 1e-10 * r.norm() || std::abs(ba.dot(m.k_dir)) > 1e-10) return "not azimuthal";
    if (std::abs(ba.norm() - std::abs(b_phi(m, l, r.norm())) * r.cross(m.k_dir).norm() / r.norm()) > 1e-10)
      return "magnitude mismatch";
    return {};
  });
}

TEST_CASE("(V, delta) -> (-V, -delta) swaps labels 1 and +") {
  prop::for_all(300, 31, [](prop::Gen& g) -> std::string {
    const double d = g.uniform(-3.0, 3.0);
    const InteractionKind kind = g.coin() ? InteractionKind::rdd : InteractionKind::vdw;
    const int sign = g.coin() ? 1 : -1;
    const PairModel m = reduced_model(d, kind, sign), f = reduced_model(-d, kind, -sign);
    const double rho = g.log_uniform(0.1, 10.0);
    if (std::abs(b_phi(m, Label::one, rho) - b_phi(f, Label::plus, rho)) > 1e-10) return "B1 != B+ mirrored";
    if (std::abs(b_phi(m, Label::minus, rho) - b_phi(f, Label::minus, rho)) > 1e-10) return "B- not invariant";
    return {};
  });
}

TEST_CASE("field map samples the transverse plane") {
  const PairModel m = reduced_model(0.0, InteractionKind::rdd, -1);
  const std::vector<GaugeSample> s = field_map(m, Label::plus, {-1.0, 0.0, 1.0}, {-0.5, 0.5});
  REQUIRE(s.size() == 6);
  CHECK(s[0].position.z() == doctest::Approx(-0.5));
  CHECK(s[0].rho == doctest::Approx(std::hypot(1.0, 0.5)));
  // Mirror x -> -x flips the transverse component of B.
  CHECK(s[0].B.dot(s[2].B) < 0.0);
}
