#pragma once

#include "core/core_model.hpp"
#include "core/spectrum.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>

namespace rydgauge {

// Dipole-blockade effective theory, |ee> eliminated. Model units.
struct BlockadeEffective {
  double gamma = 0.0;  // |Omega|^2 / (2 Delta)
  double xi = 0.0;     // (Gamma + delta)^2 + 2|Omega|^2
  double delta_eff = 0.0;  // V - 4 delta / 3
  double e0 = 0.0;
  double eplus = 0.0, eminus = 0.0;
  Eigen::Vector2d vplus, vminus;  // over {psi+, gg}
  bool valid = false;  // Lambda / |V| < 0.2
};

// Throws std::domain_error at the antiblockade resonance V = 4 delta / 3.
BlockadeEffective blockade_effective(const PairModel& model, double rho);

// 3x3 over {psi-, psi+, gg}.
Eigen::Matrix3cd effective_hamiltonian(const PairModel& model, double rho);

struct BlockadeGauge {
  double A = 0.0;    // hbar k_L, along e_k
  double phi = 0.0;  // hbar^2 k_L^2 / 2m
  bool valid = false;
};

BlockadeGauge blockade_gauge(const PairModel& model, double rho, int branch);

// Which general labels the effective branches track.
struct BlockadeCorrespondence {
  Label eff_plus;
  Label eff_minus;
  Label ee_like;  // potential stays at -hbar k_L
};

BlockadeCorrespondence blockade_correspondence(int sign_of_v);

// First order in V (delta, V in units of |Omega|).
double weak_expansion(double detuning_ratio, Label label, double v);
// The printed first-order coefficients, kept for comparison; equal to
// weak_expansion only at zero detuning.
double weak_expansion_printed(double detuning_ratio, Label label, double v);

struct AntiblockadeDistances {
  std::optional<double> single_photon;  // V(r) = delta, in r_c
  std::optional<double> two_photon;     // V(r) = 2 delta
  std::string reason;
};

AntiblockadeDistances antiblockade_distances(const PairModel& model);

}  // namespace rydgauge
