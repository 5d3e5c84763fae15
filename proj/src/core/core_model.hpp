#pragma once

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

namespace rydgauge {

using Vec3 = Eigen::Vector3d;

namespace constants {
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double atomic_mass_unit = 1.66053906660e-27; // kg
inline constexpr double boltzmann = 1.380649e-23;           // J/K
}  // namespace constants

// Laser and atom parameters in SI (angular frequencies in rad/s).
struct DriveParams {
  double rabi_magnitude = 0.0;
  double rabi_phase = 0.0;
  double detuning = 0.0;
  double wavenumber = 0.0;
  Vec3 wavevector_direction = Vec3::UnitZ();
  double mass_a = 0.0;
  double mass_b = 0.0;
};

enum class InteractionKind { rdd, vdw };

struct InteractionModel {
  InteractionKind kind = InteractionKind::rdd;
  double coefficient = 0.0;  // rad s^-1 m^3 (RDD) or m^6 (vdW), signed
};

int exponent(InteractionKind kind);
const char* to_string(InteractionKind kind);

// Throw std::invalid_argument naming the offending field.
void validate(const DriveParams& params);
void validate(const InteractionModel& model);

double interaction_shift(const InteractionModel& model, double r_ab);
double generalized_rabi(const DriveParams& params);
double crossover_distance(const InteractionModel& model, const DriveParams& params);
double characteristic_field(const DriveParams& params, double r_c);

struct ModelUnits {
  double frequency_unit = 0.0;         // |Omega|, rad/s
  double energy_unit = 0.0;            // hbar |Omega|, J
  double length_unit = 0.0;            // r_c, m
  double vector_potential_unit = 0.0;  // hbar k_L, kg m/s
  double field_unit = 0.0;             // B0, T
  double scalar_potential_unit = 0.0;  // hbar^2 k_L^2 / 2 m_a, J
  double time_unit = 0.0;              // 1/|Omega|, s
};

ModelUnits model_units(const DriveParams& params, const InteractionModel& model);

// Dimensionless pair model: energies in hbar|Omega|, lengths in r_c.
struct PairModel {
  double detuning = 0.0;  // delta/|Omega|
  double rabi_phase = 0.0;
  InteractionKind kind = InteractionKind::rdd;
  int sign = -1;  // sign of C3 or C6
  double kappa = 1.0;  // k_L r_c
  Vec3 k_dir = Vec3::UnitZ();
  double mass_ratio = 1.0;  // m_b / m_a

  double lambda() const;
  int power() const { return exponent(kind); }
  double shift(double rho) const;
  double shift_derivative(double rho) const;
};

// A PairModel with everything else at its defaults.
PairModel reduced_model(double detuning_ratio, InteractionKind kind, int sign, double kappa = 1.0);

struct PhysicalSystem {
  DriveParams drive;
  InteractionModel interaction;
  ModelUnits units;
  PairModel model;
};

PhysicalSystem make_system(const DriveParams& drive, const InteractionModel& interaction);
// Same drive with delta = ratio * |Omega|; r_c and the units follow.
PhysicalSystem with_detuning_ratio(const PhysicalSystem& system, double ratio);
PhysicalSystem with_interaction_sign(const PhysicalSystem& system, int sign);

struct ExperimentPreset {
  std::string name;
  std::string description;
  DriveParams drive;
  InteractionModel interaction;
  double lifetime = 0.0;     // s
  double temperature = 0.0;  // K
  double beam_waist = 0.0;   // m
  std::array<double, 2> rabi_range{};         // rad/s, quoted experimental span
  std::array<double, 2> coefficient_range{};  // |C| span, SI
};

const std::vector<ExperimentPreset>& presets();
const ExperimentPreset& find_preset(const std::string& name);

// Unit helpers for the usual lab notation.
double mhz_to_angular(double mhz);
double c3_from_mhz_um3(double value);
double c6_from_ghz_um6(double value);

}  // namespace rydgauge
