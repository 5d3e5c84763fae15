#pragma once

// Independent numerical routes used to cross-check the closed forms: numeric
// diagonalization in the bare product basis plus finite differences.

#include "core/core_model.hpp"
#include "core/gauge_fields.hpp"
#include "core/spectrum.hpp"

#include <array>

namespace rydgauge::oracle {

// Index 0 is psi-, then labels 1, +, - (product basis {ee, eg, ge, gg}).
struct NumericStates {
  std::array<Eigen::Vector4cd, 4> vectors;
  std::array<double, 4> energies{};
};

NumericStates numeric_states(const PairModel& model, const PairConfiguration& config);

struct StateGradient {
  std::array<Eigen::Vector4cd, 3> d;  // d chi / d x_c, c = 0..2, model length units
  Eigen::Vector4cd state;
  bool flagged = false;
  double step = 0.0;
};

StateGradient state_gradient(const PairModel& model, const PairConfiguration& config, Label label, Atom atom,
                             double step = 1e-6);

struct BerryResult {
  Vec3 A = Vec3::Zero();  // hbar k_L
  double imaginary_residual = 0.0;
  double step = 0.0;
  bool flagged = false;
};

BerryResult berry_connection_fd(const PairModel& model, Label label, const PairConfiguration& config,
                                Atom atom = Atom::a, double step = 1e-6);

// Sum over the other eigenstates of |<chi_k|grad chi_i>|^2 / kappa^2.
double scalar_potential_fd(const PairModel& model, Label label, const PairConfiguration& config,
                           Atom atom = Atom::a, double step = 1e-6);

// (<grad chi|grad chi> - |<chi|grad chi>|^2) / kappa^2, the momentum variance.
double momentum_variance_fd(const PairModel& model, Label label, const PairConfiguration& config,
                            Atom atom = Atom::a, double step = 1e-6);

struct ComVariance {
  double phi_R = 0.0;  // hbar^2 k_L^2 / 2M
  double phi_r = 0.0;  // hbar^2 k_L^2 / 2mu
};

ComVariance com_variance_fd(const PairModel& model, Label label, const PairConfiguration& config, double mass_a,
                            double mass_b, double step = 1e-6);

}  // namespace rydgauge::oracle
