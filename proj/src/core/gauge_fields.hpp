#pragma once

#include "core/core_model.hpp"
#include "core/spectrum.hpp"

#include <vector>

namespace rydgauge {

enum class Atom { a, b };

// All quantities in model units: A in hbar k_L, B in B0, phi in
// hbar^2 k_L^2 / 2m of the atom concerned.
struct SingleAtomGauge {
  int branch = +1;
  Vec3 A = Vec3::Zero();
  double phi = 0.0;
  Vec3 B = Vec3::Zero();
};

SingleAtomGauge single_atom_gauge(double detuning_ratio, int branch, const Vec3& k_dir = Vec3::UnitZ());

// Component along e_k; identical for both atoms.
double vector_potential(const PairModel& model, Label label, double rho);
Vec3 vector_potential_vector(const PairModel& model, Label label, double rho);

// dA/dr from first-order eigenvector derivatives (exact to rounding).
double b_phi(const PairModel& model, Label label, double rho);
// dA/dr by Richardson-extrapolated central differences of vector_potential.
double b_phi_fd(const PairModel& model, Label label, double rho, double step = 1e-6);

// dE/dr = V'(r) |<ee|chi>|^2.
double energy_derivative(const PairModel& model, Label label, double rho);

// r_vec = r_a - r_b. Atom b sees the opposite field.
Vec3 magnetic_field(const PairModel& model, Label label, const Vec3& r_vec, Atom atom = Atom::a);

double scalar_potential(const PairModel& model, Label label, double rho);

// True when the eigen-decomposition at rho needed the numeric fallback or two
// coupled levels are closer than 1e-10.
bool sample_flagged(const PairModel& model, double rho);

struct GaugeSample {
  Label label = Label::plus;
  Vec3 position = Vec3::Zero();  // atom a, atom b at the origin
  double rho = 0.0;
  Vec3 A = Vec3::Zero();
  double phi = 0.0;
  Vec3 B = Vec3::Zero();
  bool flagged = false;
};

// Atom b at the origin, atom a on the (x, z) grid; origin points are flagged.
std::vector<GaugeSample> field_map(const PairModel& model, Label label, const std::vector<double>& xs,
                                   const std::vector<double>& zs);

}  // namespace rydgauge
