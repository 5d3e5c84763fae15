#pragma once

#include "core/core_model.hpp"
#include "core/spectrum.hpp"

#include <string>
#include <vector>

namespace rydgauge {

struct ForceSwitches {
  bool lorentz = true;
  bool adiabatic_potential = false;
  bool scalar_gradient = false;
};

// SI throughout. Atom a moves, atom b is pinned.
struct TrajectoryConfig {
  Label label = Label::plus;
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  Vec3 pinned = Vec3::Zero();
  double charge = constants::elementary_charge;
  double time_step = 50e-9;
  double max_time = 200e-6;
  double max_path_length = 0.0;  // stop once the arc length transverse to k_L reaches this; 0 disables
  ForceSwitches switches;
  double background = 0.0;  // uniform U, J
  std::size_t output_stride = 1;
};

struct TrajectoryState {
  double t = 0.0;
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  double energy_label = 0.0;  // J
  double adiabaticity = 0.0;
  bool adiabaticity_infinite = false;
};

struct TrajectoryResult {
  std::vector<TrajectoryState> states;
  bool aborted = false;
  std::string reason;
  std::size_t steps = 0;
  double path_length = 0.0;
  double traversal_time = 0.0;  // time at which max_path_length was reached
};

struct ForceResult {
  Vec3 force = Vec3::Zero();
  bool abort = false;
};

ForceResult force(const PhysicalSystem& system, const TrajectoryConfig& config, const Vec3& position,
                  const Vec3& velocity);

TrajectoryResult integrate(const PhysicalSystem& system, const TrajectoryConfig& config);

struct Adiabaticity {
  double value = 0.0;
  bool infinite = false;
};

Adiabaticity adiabaticity(const PhysicalSystem& system, const TrajectoryConfig& config, const Vec3& position,
                          const Vec3& velocity);

// Label energy of the moving atom's internal state, J (U included).
double label_energy(const PhysicalSystem& system, const TrajectoryConfig& config, const Vec3& position);
double kinetic_energy(const PhysicalSystem& system, const Vec3& velocity);

// Straight pass across the pinned atom in the plane transverse to k_L: start
// at (-L/2, b) with velocity along the first axis, stop after L of path.
TrajectoryConfig paper_scenario(const PhysicalSystem& system, double speed, double impact_parameter_rc,
                                double path_length_rc = 2.0);

}  // namespace rydgauge
