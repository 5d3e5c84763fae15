#include <cmath>

#include "core/core_model.hpp"
#include "doctest.h"
#include "property.hpp"

using namespace rydgauge;

TEST_CASE("interaction shift follows the power law") {
  const InteractionModel rdd{InteractionKind::rdd, -2.0};
  const InteractionModel vdw{InteractionKind::vdw, 3.0};
  CHECK(interaction_shift(rdd, 2.0) == doctest::Approx(-2.0 / 8.0));
  CHECK(interaction_shift(vdw, 2.0) == doctest::Approx(3.0 / 64.0));
  CHECK_THROWS_AS(interaction_shift(rdd, 0.0), std::domain_error);
}

TEST_CASE("crossover distance balances |V| against Lambda") {
  prop::for_all(300, 3, [](prop::Gen& g) -> std::string {
    DriveParams d;
    d.rabi_magnitude = g.log_uniform(1e5, 1e8);
    d.detuning = g.uniform(-5.0, 5.0) * d.rabi_magnitude;
    d.wavenumber = 2e7;
    d.mass_a = d.mass_b = 1e-25;
    const InteractionModel m{g.coin() ? InteractionKind::rdd : InteractionKind::vdw, g.signed_log(1e-30, 1e-15)};
    const double rc = crossover_distance(m, d);
    const double ratio = std::abs(interaction_shift(m, rc)) / generalized_rabi(d);
    return std::abs(ratio - 1.0) < 1e-12 ? "" : "|V(r_c)| != Lambda";
  });
}

TEST_CASE("validation rejects bad parameters") {
  DriveParams d;
  d.rabi_magnitude = 1.0;
  d.wavenumber = 1.0;
  d.mass_a = d.mass_b = 1.0;
  CHECK_NOTHROW(validate(d));
  d.wavevector_direction = Vec3(1.0, 1.0, 0.0);
  CHECK_THROWS_AS(validate(d), std::invalid_argument);
  d.wavevector_direction = Vec3::UnitZ();
  d.rabi_magnitude = 0.0;
  CHECK_THROWS_AS(validate(d), std::invalid_argument);
  CHECK_THROWS_AS(validate(InteractionModel{InteractionKind::vdw, 0.0}), std::invalid_argument);
}

TEST_CASE("natural units of the gaetan2009 preset") {
  const ExperimentPreset& p = find_preset("gaetan2009");
  const PhysicalSystem s = make_system(p.drive, p.interaction);
  CHECK(s.units.length_unit * 1e6 == doctest::Approx(7.896).epsilon(1e-3));
  CHECK(s.units.field_unit * 1e3 == doctest::Approx(1.769).epsilon(1e-3));
  CHECK(s.model.kappa == doctest::Approx(s.drive.wavenumber * s.units.length_unit));
  CHECK(s.model.sign == -1);
  CHECK(s.units.field_unit ==
        doctest::Approx(constants::hbar * s.drive.wavenumber / (constants::elementary_charge * s.units.length_unit)));
  CHECK_THROWS_AS(find_preset("nope"), std::invalid_argument);
}

TEST_CASE("detuning ratio and sign helpers rebuild derived scales") {
  const ExperimentPreset& p = find_preset("gaetan2009");
  const PhysicalSystem s = make_system(p.drive, p.interaction);
  const PhysicalSystem t = with_detuning_ratio(s, 3.0);
  CHECK(t.model.detuning == doctest::Approx(3.0));
  CHECK(t.units.length_unit == doctest::Approx(s.units.length_unit * std::cbrt(std::sqrt(10.0))));
  CHECK(with_interaction_sign(s, +1).model.sign == 1);
}

TEST_CASE("reduced model shift and derivative") {
  prop::for_all(200, 5, [](prop::Gen& g) -> std::string {
    const PairModel m = reduced_model(g.uniform(-5, 5), g.coin() ? InteractionKind::rdd : InteractionKind::vdw,
                                      g.coin() ? 1 : -1);
    const double rho = g.log_uniform(0.05, 20.0);
    if (std::abs(std::abs(m.shift(1.0)) - m.lambda()) > 1e-12 * m.lambda()) return "|V(1)| != Lambda";
    const double h = 1e-6 * rho;
    const double fd = (m.shift(rho + h) - m.shift(rho - h)) / (2 * h);
    if (std::abs(fd - m.shift_derivative(rho)) > 1e-6 * std::abs(fd)) return "shift derivative mismatch";
    return {};
  });
}
