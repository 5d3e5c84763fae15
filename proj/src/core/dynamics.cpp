#include "core/dynamics.hpp"

#include "core/gauge_fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <complex>

namespace rydgauge {

namespace {

Vec3 separation_rc(const PhysicalSystem& s, const TrajectoryConfig& c, const Vec3& position) {
  return (position - c.pinned) / s.units.length_unit;
}

double scalar_derivative(const PairModel& m, Label label, double rho) {
  const double h = 1e-6;
  auto central = [&](double step) {
    return (scalar_potential(m, label, rho + step) - scalar_potential(m, label, rho - step)) / (2.0 * step);
  };
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

}  // namespace

ForceResult force(const PhysicalSystem& s, const TrajectoryConfig& c, const Vec3& position, const Vec3& velocity) {
  ForceResult out;
  const Vec3 rv = separation_rc(s, c, position);
  const double rho = rv.norm();
  if (!(rho >= 0.01)) {
    out.abort = true;
    return out;
  }
  const Vec3 er = rv / rho;
  const double charge_ratio = c.charge / constants::elementary_charge;
  if (c.switches.lorentz) {
    const Vec3 b = magnetic_field(s.model, c.label, rv, Atom::a) * s.units.field_unit;
    out.force += c.charge * velocity.cross(b);
  }
  if (c.switches.adiabatic_potential) {
    const double de = energy_derivative(s.model, c.label, rho) * s.units.energy_unit / s.units.length_unit;
    out.force -= de * er;
  }
  if (c.switches.scalar_gradient) {
    const double dphi =
        scalar_derivative(s.model, c.label, rho) * s.units.scalar_potential_unit / s.units.length_unit;
    out.force -= charge_ratio * dphi * er;
  }
  return out;
}

double label_energy(const PhysicalSystem& s, const TrajectoryConfig& c, const Vec3& position) {
  const double rho = separation_rc(s, c, position).norm();
  const Spectrum spec = eigenvalues_analytic(1.0, s.model.detuning, s.model.shift(rho));
  return spec.energy(c.label) * s.units.energy_unit + c.background;
}

double kinetic_energy(const PhysicalSystem& s, const Vec3& velocity) {
  return 0.5 * s.drive.mass_a * velocity.squaredNorm();
}

Adiabaticity adiabaticity(const PhysicalSystem& s, const TrajectoryConfig& c, const Vec3& position,
                          const Vec3& velocity) {
  Adiabaticity out;
  const double speed = velocity.norm();
  if (speed == 0.0) return out;
  const double rc = s.units.length_unit;
  auto config_at = [&](const Vec3& p) {
    PairConfiguration pc;
    pc.position_a = p / rc;
    pc.position_b = c.pinned / rc;
    return pc;
  };
  const PairConfiguration here = config_at(position);
  const double rho = here.separation();
  const double tau = 1e-6 * rc / speed;
  const Eigen::Vector4cd up = product_state(s.model, config_at(position + tau * velocity), c.label);
  const Eigen::Vector4cd dn = product_state(s.model, config_at(position - tau * velocity), c.label);
  const Eigen::Vector4cd dchi = (up - dn) / (2.0 * tau);  // 1/s

  const Spectrum spec = eigenvalues_analytic(1.0, s.model.detuning, s.model.shift(rho));
  const double ei = spec.energy(c.label);
  auto consider = [&](const Eigen::Vector4cd& other, double ej) {
    const double coupling = std::abs(other.dot(dchi));
    const double gap = std::abs(ei - ej) * s.units.frequency_unit;
    if (std::abs(ei - ej) < 1e-10) {
      if (coupling > 1e-14) out.infinite = true;
      return;
    }
    out.value = std::max(out.value, coupling / gap);
  };
  consider(psi_minus_product(s.model, here), 0.0);
  for (Label other : all_labels)
    if (other != c.label) consider(product_state(s.model, here, other), spec.energy(other));
  if (out.infinite) out.value = std::numeric_limits<double>::infinity();
  return out;
}

TrajectoryResult integrate(const PhysicalSystem& s, const TrajectoryConfig& c) {
  TrajectoryResult res;
  const double mass = s.drive.mass_a;
  const Vec3 k = s.model.k_dir;
  auto record = [&](double t, const Vec3& x, const Vec3& v) {
    TrajectoryState st;
    st.t = t;
    st.position = x;
    st.velocity = v;
    st.energy_label = label_energy(s, c, x);
    const Adiabaticity a = adiabaticity(s, c, x, v);
    st.adiabaticity = a.value;
    st.adiabaticity_infinite = a.infinite;
    res.states.push_back(st);
  };
  auto transverse_speed = [&](const Vec3& v) { return (v - v.dot(k) * k).norm(); };

  Vec3 x = c.position, v = c.velocity;
  double t = 0.0;
  if ((x - c.pinned).norm() / s.units.length_unit < 0.01) {
    res.aborted = true;
    res.reason = "initial separation below 0.01 r_c";
    return res;
  }
  record(t, x, v);
  const double dt = c.time_step;
  const std::size_t stride = c.output_stride == 0 ? 1 : c.output_stride;
  bool abort = false;
  auto accel = [&](const Vec3& xp, const Vec3& vp) {
    const ForceResult f = force(s, c, xp, vp);
    abort = abort || f.abort;
    return Vec3(f.force / mass);
  };

  while (t < c.max_time * (1.0 - 1e-12)) {
    const double h = std::min(dt, c.max_time - t);
    const Vec3 k1x = v, k1v = accel(x, v);
    const Vec3 k2x = v + 0.5 * h * k1v, k2v = accel(x + 0.5 * h * k1x, k2x);
    const Vec3 k3x = v + 0.5 * h * k2v, k3v = accel(x + 0.5 * h * k2x, k3x);
    const Vec3 k4x = v + h * k3v, k4v = accel(x + h * k3x, k4x);
    if (abort) {
      res.aborted = true;
      res.reason = "separation fell below 0.01 r_c";
      break;
    }
    const double speed_before = transverse_speed(v);
    x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    t += h;
    ++res.steps;
    const double ds = 0.5 * (speed_before + transverse_speed(v)) * h;
    const double before = res.path_length;
    res.path_length += ds;
    const bool done = c.max_path_length > 0.0 && res.path_length >= c.max_path_length;
    if (done) res.traversal_time = t - h + h * (c.max_path_length - before) / ds;
    if (done || res.steps % stride == 0) record(t, x, v);
    if (done) break;
  }
  if (res.states.back().t != t) record(t, x, v);
  return res;
}

TrajectoryConfig paper_scenario(const PhysicalSystem& s, double speed, double impact_parameter_rc,
                                double path_length_rc) {
  const Vec3 k = s.model.k_dir;
  const Vec3 trial = std::abs(k.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = (trial - trial.dot(k) * k).normalized();
  const Vec3 e2 = k.cross(e1);
  const double rc = s.units.length_unit;
  const double path = path_length_rc * rc;
  TrajectoryConfig c;
  c.label = Label::plus;
  c.position = -0.5 * path * e1 + impact_parameter_rc * rc * e2;
  c.velocity = speed * e1;
  c.max_path_length = path;
  c.max_time = 2.0 * path / speed;
  c.output_stride = 20;
  return c;
}

}  // namespace rydgauge
