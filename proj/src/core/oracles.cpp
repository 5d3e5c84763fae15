#include "core/oracles.hpp"

#include "core/jacobi.hpp"

#include <cmath>
#include <complex>

namespace rydgauge::oracle {

using cd = std::complex<double>;

NumericStates numeric_states(const PairModel& model, const PairConfiguration& config) {
  const Eigen::Vector4cd psi = psi_minus_product(model, config);
  const double v = model.shift(config.separation());
  // Lift psi- above the coupled levels so its degeneracy with them is harmless.
  const double lift = 2.0 * (std::abs(v) + std::abs(model.detuning) + 2.0);
  Eigen::Matrix4cd h = build_product_hamiltonian(model, config);
  h += lift * psi * psi.adjoint();
  h = 0.5 * (h + h.adjoint()).eval();
  const HermitianEigen eig = jacobi_eigen(h);

  const cd omega_conj = std::polar(1.0, -model.rabi_phase);
  auto fix = [&](Eigen::Vector4cd vec, double energy) {
    // A tiny gg amplitude carries roundoff-sized phase noise; rebuild it from the gg row of (H - E) v = 0,
    // which only involves the large components.
    cd gg = vec(3);
    const double denom = energy - h(3, 3).real();
    if (std::abs(gg) < 0.1 && std::abs(denom) > 1e-3)
      gg = (h(3, 0) * vec(0) + h(3, 1) * vec(1) + h(3, 2) * vec(2)) / denom;
    const cd anchor = std::abs(gg) > 0.0 ? gg : vec(0);
    const cd target = std::abs(gg) > 0.0 ? omega_conj : cd(1.0, 0.0);
    vec *= target * std::conj(anchor) / std::abs(anchor);
    return vec;
  };

  NumericStates out;
  out.vectors[0] = psi;
  out.energies[0] = 0.0;
  // Ascending order is E+ < E- < E1.
  out.vectors[1] = fix(eig.vectors.col(2), eig.values(2));
  out.energies[1] = eig.values(2);
  out.vectors[2] = fix(eig.vectors.col(0), eig.values(0));
  out.energies[2] = eig.values(0);
  out.vectors[3] = fix(eig.vectors.col(1), eig.values(1));
  out.energies[3] = eig.values(1);
  return out;
}

namespace {

int slot(Label label) { return 1 + static_cast<int>(label); }

PairConfiguration displaced(const PairConfiguration& c, Atom atom, int axis, double h) {
  PairConfiguration out = c;
  Vec3& r = atom == Atom::a ? out.position_a : out.position_b;
  r(axis) += h;
  return out;
}

}  // namespace

StateGradient state_gradient(const PairModel& model, const PairConfiguration& config, Label label, Atom atom,
                             double step) {
  StateGradient g;
  g.state = numeric_states(model, config).vectors[slot(label)];
  auto at = [&](int c, double h) { return numeric_states(model, displaced(config, atom, c, h)).vectors[slot(label)]; };
  double h = step;
  for (int attempt = 0; attempt < 4; ++attempt, h *= 0.1) {
    bool smooth = true;
    for (int c = 0; c < 3; ++c) {
      const Eigen::Vector4cd up = at(c, h), dn = at(c, -h);
      if (std::abs(up.dot(dn)) < 0.99) smooth = false;
      // Richardson step on the central difference.
      const Eigen::Vector4cd coarse = (up - dn) / (2.0 * h);
      const Eigen::Vector4cd fine = (at(c, 0.5 * h) - at(c, -0.5 * h)) / h;
      g.d[c] = (4.0 * fine - coarse) / 3.0;
    }
    g.step = h;
    if (smooth) return g;
  }
  g.flagged = true;
  return g;
}

BerryResult berry_connection_fd(const PairModel& model, Label label, const PairConfiguration& config, Atom atom,
                                double step) {
  const StateGradient g = state_gradient(model, config, label, atom, step);
  BerryResult out;
  out.step = g.step;
  out.flagged = g.flagged;
  for (int c = 0; c < 3; ++c) {
    const cd a = cd(0.0, 1.0) * g.state.dot(g.d[c]) / model.kappa;  // dot() conjugates the left side
    out.A(c) = a.real();
    out.imaginary_residual = std::max(out.imaginary_residual, std::abs(a.imag()));
  }
  return out;
}

double scalar_potential_fd(const PairModel& model, Label label, const PairConfiguration& config, Atom atom,
                           double step) {
  const NumericStates states = numeric_states(model, config);
  const StateGradient g = state_gradient(model, config, label, atom, step);
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    if (k == slot(label)) continue;
    for (int c = 0; c < 3; ++c) sum += std::norm(states.vectors[k].dot(g.d[c]));
  }
  return sum / (model.kappa * model.kappa);
}

double momentum_variance_fd(const PairModel& model, Label label, const PairConfiguration& config, Atom atom,
                            double step) {
  const StateGradient g = state_gradient(model, config, label, atom, step);
  double var = 0.0;
  for (int c = 0; c < 3; ++c) var += g.d[c].squaredNorm() - std::norm(g.state.dot(g.d[c]));
  return var / (model.kappa * model.kappa);
}

ComVariance com_variance_fd(const PairModel& model, Label label, const PairConfiguration& config, double mass_a,
                            double mass_b, double step) {
  const StateGradient ga = state_gradient(model, config, label, Atom::a, step);
  const StateGradient gb = state_gradient(model, config, label, Atom::b, step);
  const double total = mass_a + mass_b;
  auto variance = [&](double wa, double wb) {
    double var = 0.0;
    for (int c = 0; c < 3; ++c) {
      const Eigen::Vector4cd d = wa * ga.d[c] + wb * gb.d[c];
      var += d.squaredNorm() - std::norm(ga.state.dot(d));
    }
    return var / (model.kappa * model.kappa);
  };
  ComVariance out;
  out.phi_R = variance(1.0, 1.0);
  out.phi_r = variance(mass_b / total, -mass_a / total);
  return out;
}

}  // namespace rydgauge::oracle
