#include <cmath>

#include "core/dynamics.hpp"
#include "doctest.h"

using namespace rydgauge;

namespace {

PhysicalSystem gaetan() {
  const ExperimentPreset& p = find_preset("gaetan2009");
  return make_system(p.drive, p.interaction);
}

}  // namespace

TEST_CASE("free particle far from the pinned atom") {
  const PhysicalSystem s = gaetan();
  TrajectoryConfig c;
  c.position = Vec3(0.0, 1.0, 0.0);  // 1 m away: V is negligible
  c.velocity = Vec3(0.1, 0.0, 0.02);
  c.max_time = 160e-6;
  c.switches.adiabatic_potential = true;
  const TrajectoryResult r = integrate(s, c);
  REQUIRE_FALSE(r.aborted);
  const TrajectoryState& last = r.states.back();
  CHECK((last.position - (c.position + c.velocity * last.t)).norm() < 1e-9);
  CHECK(last.t == doctest::Approx(160e-6));
}

TEST_CASE("reference scenario geometry") {
  const PhysicalSystem s = gaetan();
  const TrajectoryConfig c = paper_scenario(s, 0.1, 1.0);
  const double rc = s.units.length_unit;
  CHECK(c.label == Label::plus);
  CHECK(c.velocity.norm() == doctest::Approx(0.1));
  CHECK(std::abs(c.velocity.dot(s.model.k_dir)) < 1e-15);
  CHECK(c.position.norm() == doctest::Approx(rc * std::sqrt(2.0)));
  CHECK(c.max_path_length == doctest::Approx(2.0 * rc));
}

TEST_CASE("Lorentz force does no work") {
  const PhysicalSystem s = gaetan();
  const TrajectoryConfig c = paper_scenario(s, 0.1, 1.0);
  const TrajectoryResult r = integrate(s, c);
  REQUIRE_FALSE(r.aborted);
  const double ke = kinetic_energy(s, c.velocity);
  for (const auto& st : r.states) CHECK(std::abs(kinetic_energy(s, st.velocity) / ke - 1.0) < 1e-8);
  CHECK(r.traversal_time == doctest::Approx(2.0 * s.units.length_unit / 0.1).epsilon(0.02));
}

TEST_CASE("adiabaticity vanishes at rest and is linear in speed") {
  const PhysicalSystem s = gaetan();
  const TrajectoryConfig c = paper_scenario(s, 0.1, 1.0);
  const Adiabaticity still = adiabaticity(s, c, c.position, Vec3::Zero());
  CHECK(still.value == 0.0);
  const Adiabaticity a = adiabaticity(s, c, c.position, c.velocity);
  const Adiabaticity b = adiabaticity(s, c, c.position, 2.0 * c.velocity);
  CHECK(a.value > 0.0);
  CHECK(b.value == doctest::Approx(2.0 * a.value).epsilon(1e-6));
}

TEST_CASE("collision with the pinned atom aborts") {
  const PhysicalSystem s = gaetan();
  TrajectoryConfig c;
  c.position = Vec3(-0.02, 0.0, 0.0) * s.units.length_unit;
  c.velocity = Vec3(0.1, 0.0, 0.0);
  c.max_time = 10e-6;
  const TrajectoryResult r = integrate(s, c);
  CHECK(r.aborted);
  CHECK_FALSE(r.reason.empty());
  CHECK_FALSE(r.states.empty());
}
