#include "core/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rydgauge {

BlockadeEffective blockade_effective(const PairModel& model, double rho) {
  const double v = model.shift(rho), d = model.detuning;
  BlockadeEffective b;
  b.delta_eff = v - 4.0 * d / 3.0;
  // A separation cannot hit the resonance exactly in floating point, so match it to roundoff.
  if (std::abs(b.delta_eff) <= 1e-12 * std::max({std::abs(v), std::abs(d), 1.0}))
    throw std::domain_error("blockade: V = 4 delta/3 makes Gamma singular (antiblockade resonance)");
  b.gamma = 1.0 / (2.0 * b.delta_eff);
  b.xi = (b.gamma + d) * (b.gamma + d) + 2.0;
  b.e0 = -d / 3.0;
  const double root = std::sqrt(b.xi);
  b.eplus = (d - 3.0 * b.gamma - 3.0 * root) / 6.0;
  b.eminus = (d - 3.0 * b.gamma + 3.0 * root) / 6.0;
  // Unnormalized components (-(Gamma+delta) -/+ sqrt(Xi), sqrt(2) Omega*) over {psi+, gg}.
  b.vplus = Eigen::Vector2d(-(b.gamma + d) - root, std::sqrt(2.0)).normalized();
  b.vminus = Eigen::Vector2d(-(b.gamma + d) + root, std::sqrt(2.0)).normalized();
  b.valid = model.lambda() / std::abs(v) < 0.2;
  return b;
}

Eigen::Matrix3cd effective_hamiltonian(const PairModel& model, double rho) {
  const BlockadeEffective b = blockade_effective(model, rho);
  const double d = model.detuning;
  const std::complex<double> coupling = std::polar(1.0 / std::sqrt(2.0), model.rabi_phase);
  Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
  h(0, 0) = -d / 3.0;
  h(1, 1) = -(3.0 * b.gamma + d) / 3.0;
  h(2, 2) = 2.0 * d / 3.0;
  h(1, 2) = coupling;
  h(2, 1) = std::conj(coupling);
  return h;
}

BlockadeGauge blockade_gauge(const PairModel& model, double rho, int branch) {
  const BlockadeEffective b = blockade_effective(model, rho);
  const double s = branch < 0 ? -1.0 : 1.0;
  const double d = model.detuning;
  const double root = std::sqrt(b.xi);
  BlockadeGauge g;
  g.valid = b.valid;
  g.A = 0.5 * (-s * (b.gamma + d) - root) / (2.0 * root);
  // dGamma/dr = -|Omega|^2 V' / (2 Delta^2), radial gradient scaled by 1/kappa.
  const double dgamma = -model.shift_derivative(rho) / (2.0 * b.delta_eff * b.delta_eff);
  const double grad2 = dgamma * dgamma / (model.kappa * model.kappa);
  g.phi = (1.0 + s * (b.gamma + d) / root + 1.0 / b.xi + 4.0 * grad2 / (b.xi * b.xi)) / 8.0;
  return g;
}

BlockadeCorrespondence blockade_correspondence(int sign_of_v) {
  if (sign_of_v > 0) return {Label::plus, Label::minus, Label::one};
  return {Label::minus, Label::one, Label::plus};
}

double weak_expansion(double d, Label label, double v) {
  const double lambda = std::sqrt(1.0 + d * d);
  const double l4 = lambda * lambda * lambda * lambda;
  switch (label) {
    case Label::one: return 0.5 * ((-1.0 + d / lambda) + (d - lambda) / (2.0 * l4) * v);
    case Label::plus: return 0.5 * ((-1.0 - d / lambda) + (d + lambda) / (2.0 * l4) * v);
    case Label::minus: return 0.5 * (-1.0 - d / l4 * v);
  }
  return 0.0;
}

double weak_expansion_printed(double d, Label label, double v) {
  const double lambda = std::sqrt(1.0 + d * d);
  const double l4 = lambda * lambda * lambda * lambda;
  const double cube = 2.0 * d * d * d;
  switch (label) {
    case Label::one: return 0.5 * ((-1.0 + d / lambda) + (cube + 3.0 * (d - lambda)) / (6.0 * l4) * v);
    case Label::plus: return 0.5 * ((-1.0 - d / lambda) + (cube + 3.0 * (d + lambda)) / (6.0 * l4) * v);
    case Label::minus: return 0.5 * (-1.0 - d / (3.0 * l4) * v);
  }
  return 0.0;
}

AntiblockadeDistances antiblockade_distances(const PairModel& model) {
  AntiblockadeDistances out;
  const double d = model.detuning;
  if (d == 0.0) {
    out.reason = "zero detuning: no finite separation satisfies V = delta or V = 2 delta";
    return out;
  }
  if ((d > 0.0) != (model.sign > 0)) {
    out.reason = "detuning and interaction have opposite signs: no antiblockade distance";
    return out;
  }
  const double n = model.power();
  const double lambda = model.lambda();
  out.single_photon = std::pow(lambda / std::abs(d), 1.0 / n);
  out.two_photon = std::pow(lambda / std::abs(2.0 * d), 1.0 / n);
  return out;
}

}  // namespace rydgauge
