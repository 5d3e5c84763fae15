#include "core/com_frame.hpp"

#include <cmath>
#include <stdexcept>

namespace rydgauge {

ComFrame to_com(const Vec3& r_a, const Vec3& r_b, double mass_a, double mass_b) {
  if (!(mass_a > 0.0 && mass_b > 0.0)) throw std::invalid_argument("masses must be > 0");
  ComFrame f;
  f.total_mass = mass_a + mass_b;
  f.reduced_mass = mass_a * mass_b / f.total_mass;
  f.R = (mass_a * r_a + mass_b * r_b) / f.total_mass;
  f.r = r_a - r_b;
  return f;
}

void from_com(const ComFrame& f, double mass_a, double mass_b, Vec3& r_a, Vec3& r_b) {
  const double total = mass_a + mass_b;
  r_a = f.R + (mass_b / total) * f.r;
  r_b = f.R - (mass_a / total) * f.r;
}

ComVectorPotentials com_vector_potentials(const Vec3& A_a, const Vec3& A_b, double mass_a, double mass_b) {
  ComVectorPotentials out;
  out.A_R = A_a + A_b;
  out.A_r = (mass_b * A_a - mass_a * A_b) / (mass_a + mass_b);
  return out;
}

ComScalarPotentials com_scalar_potentials(const PairModel& model, Label label, double rho, double mass_a,
                                          double mass_b) {
  if (!(mass_a > 0.0 && mass_b > 0.0)) throw std::invalid_argument("masses must be > 0");
  const auto states = ladder_states(model, rho);
  const int i = static_cast<int>(label);
  const LadderState& si = states[i];
  const double dv = model.shift_derivative(rho);
  const double kappa2 = model.kappa * model.kappa;
  const double de = dv * si.ce * si.ce;
  const double df = -dv * (si.cplus * si.cplus + si.cg * si.cg);
  const double asym = (mass_b - mass_a) / (mass_a + mass_b);

  double phase_sum = 0.0, radial_sum = 0.0;
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
    phase_sum += phase * phase;
    radial_sum += radial * radial / kappa2;
  }
  ComScalarPotentials out;
  // grad_R = grad_a + grad_b doubles every cross-label phase overlap.
  out.phi_R = 4.0 * phase_sum;
  out.phi_r = 0.25 * si.cplus * si.cplus + radial_sum + asym * asym * phase_sum;
  return out;
}

}  // namespace rydgauge
