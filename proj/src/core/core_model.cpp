#include "core/core_model.hpp"

#include <cmath>
#include <stdexcept>

namespace rydgauge {

using namespace constants;

int exponent(InteractionKind kind) { return kind == InteractionKind::rdd ? 3 : 6; }

const char* to_string(InteractionKind kind) { return kind == InteractionKind::rdd ? "rdd" : "vdw"; }

void validate(const DriveParams& p) {
  auto positive = [](double v, const char* what) {
    if (!(std::isfinite(v) && v > 0.0)) throw std::invalid_argument(std::string(what) + " must be > 0");
  };
  positive(p.rabi_magnitude, "rabi_magnitude");
  positive(p.wavenumber, "wavenumber");
  positive(p.mass_a, "mass_a");
  positive(p.mass_b, "mass_b");
  if (!std::isfinite(p.detuning)) throw std::invalid_argument("detuning must be finite");
  if (!std::isfinite(p.rabi_phase)) throw std::invalid_argument("rabi_phase must be finite");
  if (std::abs(p.wavevector_direction.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("wavevector_direction must be a unit vector");
}

void validate(const InteractionModel& m) {
  if (!(std::isfinite(m.coefficient) && m.coefficient != 0.0))
    throw std::invalid_argument("interaction coefficient must be finite and nonzero");
}

double interaction_shift(const InteractionModel& model, double r_ab) {
  if (!(r_ab > 0.0)) throw std::domain_error("interaction_shift: r_ab must be > 0");
  return model.coefficient / std::pow(r_ab, exponent(model.kind));
}

double generalized_rabi(const DriveParams& p) { return std::hypot(p.rabi_magnitude, p.detuning); }

double crossover_distance(const InteractionModel& model, const DriveParams& params) {
  return std::pow(std::abs(model.coefficient) / generalized_rabi(params), 1.0 / exponent(model.kind));
}

double characteristic_field(const DriveParams& params, double r_c) {
  if (!(r_c > 0.0)) throw std::domain_error("characteristic_field: r_c must be > 0");
  return hbar * params.wavenumber / (elementary_charge * r_c);
}

ModelUnits model_units(const DriveParams& params, const InteractionModel& model) {
  ModelUnits u;
  u.frequency_unit = params.rabi_magnitude;
  u.energy_unit = hbar * params.rabi_magnitude;
  u.length_unit = crossover_distance(model, params);
  u.vector_potential_unit = hbar * params.wavenumber;
  u.field_unit = characteristic_field(params, u.length_unit);
  u.scalar_potential_unit = hbar * hbar * params.wavenumber * params.wavenumber / (2.0 * params.mass_a);
  u.time_unit = 1.0 / params.rabi_magnitude;
  return u;
}

double PairModel::lambda() const { return std::sqrt(1.0 + detuning * detuning); }

double PairModel::shift(double rho) const {
  if (!(rho > 0.0)) throw std::domain_error("pair separation must be > 0");
  return sign * lambda() / std::pow(rho, power());
}

double PairModel::shift_derivative(double rho) const { return -power() * shift(rho) / rho; }

PairModel reduced_model(double detuning_ratio, InteractionKind kind, int sign, double kappa) {
  PairModel m;
  m.detuning = detuning_ratio;
  m.kind = kind;
  m.sign = sign < 0 ? -1 : 1;
  m.kappa = kappa;
  return m;
}

PhysicalSystem make_system(const DriveParams& drive, const InteractionModel& interaction) {
  validate(drive);
  validate(interaction);
  PhysicalSystem s;
  s.drive = drive;
  s.interaction = interaction;
  s.units = model_units(drive, interaction);
  s.model.detuning = drive.detuning / drive.rabi_magnitude;
  s.model.rabi_phase = drive.rabi_phase;
  s.model.kind = interaction.kind;
  s.model.sign = interaction.coefficient < 0 ? -1 : 1;
  s.model.kappa = drive.wavenumber * s.units.length_unit;
  s.model.k_dir = drive.wavevector_direction;
  s.model.mass_ratio = drive.mass_b / drive.mass_a;
  return s;
}

PhysicalSystem with_detuning_ratio(const PhysicalSystem& system, double ratio) {
  DriveParams d = system.drive;
  d.detuning = ratio * d.rabi_magnitude;
  return make_system(d, system.interaction);
}

PhysicalSystem with_interaction_sign(const PhysicalSystem& system, int sign) {
  InteractionModel m = system.interaction;
  m.coefficient = (sign < 0 ? -1.0 : 1.0) * std::abs(m.coefficient);
  return make_system(system.drive, m);
}

double mhz_to_angular(double mhz) { return 2.0 * pi * mhz * 1e6; }
double c3_from_mhz_um3(double value) { return 2.0 * pi * value * 1e6 * 1e-18; }
double c6_from_ghz_um6(double value) { return 2.0 * pi * value * 1e9 * 1e-36; }

namespace {

std::vector<ExperimentPreset> build_presets() {
  const double mass = 87.0 * atomic_mass_unit;
  const double k = 2.0 * pi / 296e-9;

  ExperimentPreset g;
  g.name = "gaetan2009";
  g.description = "RDD pair, |Omega|/2pi = 6.5 MHz, C3/2pi = -3200 MHz um^3, 296 nm, 87Rb";
  g.drive.rabi_magnitude = mhz_to_angular(6.5);
  g.drive.wavenumber = k;
  g.drive.mass_a = g.drive.mass_b = mass;
  g.interaction = {InteractionKind::rdd, c3_from_mhz_um3(-3200.0)};
  g.lifetime = 500e-6;
  g.temperature = 50e-6;
  g.beam_waist = 1e-6;
  g.rabi_range = {g.drive.rabi_magnitude, g.drive.rabi_magnitude};
  g.coefficient_range = {c3_from_mhz_um3(3200.0), c3_from_mhz_um3(3200.0)};

  ExperimentPreset b;
  b.name = "beguin2013";
  b.description = "vdW pair, |Omega|/2pi = 1 MHz (0.5-5), C6/2pi = -1000 GHz um^6 (10-10000), 296 nm, 87Rb";
  b.drive.rabi_magnitude = mhz_to_angular(1.0);
  b.drive.wavenumber = k;
  b.drive.mass_a = b.drive.mass_b = mass;
  b.interaction = {InteractionKind::vdw, c6_from_ghz_um6(-1000.0)};
  b.lifetime = 200e-6;
  b.temperature = 50e-6;
  b.beam_waist = 1e-6;
  b.rabi_range = {mhz_to_angular(0.5), mhz_to_angular(5.0)};
  b.coefficient_range = {c6_from_ghz_um6(10.0), c6_from_ghz_um6(10000.0)};

  return {g, b};
}

}  // namespace

const std::vector<ExperimentPreset>& presets() {
  static const std::vector<ExperimentPreset> all = build_presets();
  return all;
}

const ExperimentPreset& find_preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace rydgauge
