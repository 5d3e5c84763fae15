#include "core/gauge_fields.hpp"

#include <cmath>

namespace rydgauge {

SingleAtomGauge single_atom_gauge(double detuning_ratio, int branch, const Vec3& k_dir) {
  const double lambda = std::sqrt(1.0 + detuning_ratio * detuning_ratio);
  SingleAtomGauge g;
  g.branch = branch < 0 ? -1 : 1;
  g.A = 0.5 * (-1.0 + g.branch * detuning_ratio / lambda) * k_dir;
  g.phi = 0.25 / (lambda * lambda);
  return g;
}

double vector_potential(const PairModel& model, Label label, double rho) {
  const LadderState s = ladder_state(model, rho, label);
  return -(s.ce * s.ce + 0.5 * s.cplus * s.cplus);
}

Vec3 vector_potential_vector(const PairModel& model, Label label, double rho) {
  return vector_potential(model, label, rho) * model.k_dir;
}

namespace {

int index_of(Label label) { return static_cast<int>(label); }

}  // namespace

double b_phi(const PairModel& model, Label label, double rho) {
  const auto states = ladder_states(model, rho);
  const int i = index_of(label);
  const LadderState& si = states[i];
  double sum = 0.0;
  for (int j = 0; j < 3; ++j) {
    if (j == i) continue;
    const LadderState& sj = states[j];
    sum += sj.ce * (si.ce * sj.ce - si.cg * sj.cg) / (si.energy - sj.energy);
  }
  return -model.shift_derivative(rho) * si.ce * sum;
}

double b_phi_fd(const PairModel& model, Label label, double rho, double step) {
  auto central = [&](double h) {
    return (vector_potential(model, label, rho + h) - vector_potential(model, label, rho - h)) / (2.0 * h);
  };
  const double coarse = central(step), fine = central(0.5 * step);
  return (4.0 * fine - coarse) / 3.0;
}

double energy_derivative(const PairModel& model, Label label, double rho) {
  const LadderState s = ladder_state(model, rho, label);
  return model.shift_derivative(rho) * s.ce * s.ce;
}

Vec3 magnetic_field(const PairModel& model, Label label, const Vec3& r_vec, Atom atom) {
  const double rho = r_vec.norm();
  const Vec3 axis = model.k_dir.cross(r_vec / rho);  // sin(theta) e_phi
  if (axis.squaredNorm() == 0.0) return Vec3::Zero();
  const Vec3 b = b_phi(model, label, rho) * axis;
  return atom == Atom::a ? b : Vec3(-b);
}

double scalar_potential(const PairModel& model, Label label, double rho) {
  const auto states = ladder_states(model, rho);
  const int i = index_of(label);
  const LadderState& si = states[i];
  const double dv = model.shift_derivative(rho);
  const double kappa2 = model.kappa * model.kappa;

  // E'_i by Hellmann-Feynman; F'_i = E'_i - V' written without cancellation.
  const double de = dv * si.ce * si.ce;
  const double df = -dv * (si.cplus * si.cplus + si.cg * si.cg);

  double sum = 0.0;
  for (int j = 0; j < 3; ++j) {
    if (j == i) continue;
    const LadderState& sj = states[j];
    const double phase = si.ce * sj.ce + 0.5 * si.cplus * sj.cplus;
    double radial;
    if (!si.fallback && !sj.fallback) {
      const double cf = 1.0 + 2.0 * si.cal_f * sj.cal_f;
      const double ce = 1.0 + 2.0 * si.cal_e * sj.cal_e;
      radial = si.norm * sj.norm * (de * sj.cal_e * cf + ce * df * sj.cal_f);
    } else {
      radial = dv * si.ce * sj.ce / (si.energy - sj.energy);
    }
    sum += radial * radial / kappa2 + phase * phase;
  }
  return 0.25 * si.cplus * si.cplus + sum;
}

bool sample_flagged(const PairModel& model, double rho) {
  const auto states = ladder_states(model, rho);
  for (int i = 0; i < 3; ++i) {
    if (states[i].fallback) return true;
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(states[i].energy - states[j].energy) < 1e-10) return true;
  }
  return false;
}

namespace {

Vec3 perpendicular(const Vec3& k) {
  const Vec3 trial = std::abs(k.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  return (trial - trial.dot(k) * k).normalized();
}

}  // namespace

std::vector<GaugeSample> field_map(const PairModel& model, Label label, const std::vector<double>& xs,
                                   const std::vector<double>& zs) {
  const Vec3 ex = perpendicular(model.k_dir);
  std::vector<GaugeSample> out;
  out.reserve(xs.size() * zs.size());
  for (double z : zs) {
    for (double x : xs) {
      GaugeSample s;
      s.label = label;
      s.position = x * ex + z * model.k_dir;
      s.rho = s.position.norm();
      if (!(s.rho > 0.0)) {
        s.flagged = true;
        out.push_back(s);
        continue;
      }
      s.A = vector_potential_vector(model, label, s.rho);
      s.phi = scalar_potential(model, label, s.rho);
      s.B = magnetic_field(model, label, s.position, Atom::a);
      s.flagged = sample_flagged(model, s.rho);
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace rydgauge
