#include "core/spectrum.hpp"

#include "core/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace rydgauge {

using cd = std::complex<double>;
using constants::pi;

const char* to_string(Label label) {
  switch (label) {
    case Label::one: return "1";
    case Label::plus: return "+";
    case Label::minus: return "-";
  }
  return "?";
}

Label parse_label(const std::string& text) {
  if (text == "1" || text == "one") return Label::one;
  if (text == "+" || text == "plus") return Label::plus;
  if (text == "-" || text == "minus") return Label::minus;
  throw std::invalid_argument("unknown state label '" + text + "' (expected 1, +, -)");
}

double Spectrum::energy(Label label) const {
  switch (label) {
    case Label::one: return e1;
    case Label::plus: return eplus;
    case Label::minus: return eminus;
  }
  return 0.0;
}

namespace {

cd rabi_phasor(const PairModel& m) { return std::polar(1.0, m.rabi_phase); }

cd plane_wave(const PairModel& m, const Vec3& r) { return std::polar(1.0, m.kappa * m.k_dir.dot(r)); }

// Characteristic polynomial of the coupled block in factored form; evaluating
// it this way keeps the ee-like root accurate when |V| is huge.
struct Cubic {
  double v, d, a2;
  double value(double e) const { return (v - d - e) * (e * (e - d) - a2) - a2 * (d - e); }
  double slope(double e) const { return -(e * (e - d) - a2) + (v - d - e) * (2.0 * e - d) + a2; }
};

// Safeguarded Newton inside a sign-change bracket.
double solve_bracketed(const Cubic& c, double lo, double hi, double guess) {
  double flo = c.value(lo);
  const double fhi = c.value(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) return guess;
  double x = std::clamp(guess, lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double fx = c.value(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double df = c.slope(x);
    double next = df != 0.0 ? x - fx / df : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double tiny = 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
    if (std::abs(next - x) <= tiny || hi - lo <= tiny) return next;
    x = next;
  }
  return x;
}

}  // namespace

Eigen::Matrix4cd build_hamiltonian(const PairModel& m, const PairConfiguration& config) {
  const double rho = config.separation();
  if (!(rho > 0.0)) throw std::domain_error("build_hamiltonian: r_ab must be > 0");
  const double v = m.shift(rho);
  const cd omega = rabi_phasor(m);
  const cd p = plane_wave(m, config.position_a + config.position_b);
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(1, 1) = v - m.detuning;
  h(3, 3) = m.detuning;
  h(1, 2) = s * omega * p;
  h(2, 1) = std::conj(h(1, 2));
  h(2, 3) = s * omega;
  h(3, 2) = std::conj(h(2, 3));
  return h;
}

Eigen::Matrix4cd build_product_hamiltonian(const PairModel& m, const PairConfiguration& config) {
  const double rho = config.separation();
  if (!(rho > 0.0)) throw std::domain_error("build_product_hamiltonian: r_ab must be > 0");
  const cd half = 0.5 * rabi_phasor(m);
  const cd pa = plane_wave(m, config.position_a), pb = plane_wave(m, config.position_b);
  enum { ee, eg, ge, gg };
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(ee, ee) = m.shift(rho) - m.detuning;
  h(gg, gg) = m.detuning;
  h(ee, eg) = half * pb;  // atom b raised
  h(ee, ge) = half * pa;
  h(eg, gg) = half * pa;
  h(ge, gg) = half * pb;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) h(i, j) = std::conj(h(j, i));
  return h;
}

Spectrum eigenvalues_analytic(double rabi, double detuning, double shift) {
  const double v = shift, d = detuning, r2 = rabi * rabi;
  const double p = d * (v - d) - r2 - v * v / 3.0;
  const double q = v / 3.0 * (-2.0 * v * v / 9.0 + d * (v - d) + r2 / 2.0);
  std::array<double, 3> t{0.0, 0.0, 0.0};
  if (p < 0.0) {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(1.5 * q / p * std::sqrt(-3.0 / p), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) t[k] = m * std::cos(theta - 2.0 * pi * k / 3.0);
  }
  std::array<double, 3> roots{};
  for (int k = 0; k < 3; ++k) roots[k] = t[k] + v / 3.0;

  // Roots interlace with the eigenvalues mu1 < mu2 of the trailing {psi+, gg}
  // block, which gives one bracket per root whatever the size of V.
  std::array<double, 3> polished = roots;
  const double a2 = r2 / 2.0;
  if (a2 > 0.0) {
    const Cubic cubic{v, d, a2};
    const double disc = std::sqrt(d * d + 4.0 * a2);
    const double big = 0.5 * (d + (d >= 0.0 ? disc : -disc));
    const double mu1 = std::min(big, -a2 / big), mu2 = std::max(big, -a2 / big);
    const double reach = 2.0 * std::sqrt(a2) + 1.0;
    const double upper = std::max({v - d, d, 0.0}) + reach;
    const double lower = std::min({v - d, d, 0.0}) - reach;
    polished[0] = solve_bracketed(cubic, mu2, upper, roots[0]);
    polished[1] = solve_bracketed(cubic, mu1, mu2, roots[1]);
    polished[2] = solve_bracketed(cubic, lower, mu1, roots[2]);
  } else {
    polished = {v - d, d, 0.0};
    std::sort(polished.begin(), polished.end(), std::greater<>());
  }
  Spectrum s;
  s.e1 = polished[0];
  s.eminus = polished[1];
  s.eplus = polished[2];
  return s;
}

std::array<double, 4> eigenvalues_numeric(const Eigen::Matrix4cd& h) {
  const HermitianEigen eig = jacobi_eigen(h);
  return {eig.values(0), eig.values(1), eig.values(2), eig.values(3)};
}

std::array<cd, 3> branch_formula(double rabi, double detuning, double shift) {
  const double v = shift, d = detuning, r2 = rabi * rabi;
  const double eta = 4.0 / 3.0 * (d * (v - d) - r2 - v * v / 3.0);
  const double gamma = v / 3.0 * (8.0 * v * v / 9.0 - 4.0 * d * (v - d) - 2.0 * r2);
  const cd root = std::sqrt(cd(eta * eta * eta + gamma * gamma, 0.0));
  const cd sp = std::pow(cd(gamma, 0.0) + root, 1.0 / 3.0);
  cd sm;
  if (std::abs(sp) > 0.0)
    sm = -eta / sp;
  else
    sm = std::pow(cd(gamma, 0.0) - root, 1.0 / 3.0);
  const cd i(0.0, 1.0);
  const cd e1 = 0.5 * (sp + sm + 2.0 / 3.0 * v);
  const cd ep = 0.5 * (-0.5 * (sp + sm) + 2.0 / 3.0 * v + i * std::sqrt(3.0) / 2.0 * (sp - sm));
  const cd em = 0.5 * (-0.5 * (sp + sm) + 2.0 / 3.0 * v - i * std::sqrt(3.0) / 2.0 * (sp - sm));
  return {e1, ep, em};
}

LabelAssignment assign_labels(const std::array<double, 3>& roots, double rabi, double detuning, double shift,
                              const Spectrum* previous) {
  LabelAssignment out;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(roots[i] - roots[j]) < 1e-10) out.degenerate = true;

  std::array<double, 3> target;
  if (out.degenerate && previous) {
    target = {previous->e1, previous->eplus, previous->eminus};
  } else {
    const auto f = branch_formula(rabi, detuning, shift);
    target = {f[0].real(), f[1].real(), f[2].real()};
  }
  std::array<int, 3> perm{0, 1, 2}, best = perm;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (int k = 0; k < 3; ++k) cost += std::abs(roots[perm[k]] - target[k]);
    if (cost < best_cost) {
      best_cost = cost;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.spectrum.e1 = roots[best[0]];
  out.spectrum.eplus = roots[best[1]];
  out.spectrum.eminus = roots[best[2]];
  return out;
}

namespace {

LadderState ladder_from_energy(const PairModel& m, double v, double energy) {
  LadderState s;
  s.energy = energy;
  double e = energy - m.detuning;
  double f = energy + m.detuning - v;
  // |Omega|^2 (e + f) = 2 E e f: rebuild the smaller factor from the larger.
  if (std::abs(f) < std::abs(e)) {
    const double den = 2.0 * energy * e - 1.0;
    if (den != 0.0) f = e / den;
  } else if (std::abs(e) < std::abs(f)) {
    const double den = 2.0 * energy * f - 1.0;
    if (den != 0.0) e = f / den;
  }
  s.cal_e = e;
  s.cal_f = f;
  const double dd = e * e + f * f + 2.0 * e * e * f * f;
  const double len = std::sqrt(dd);
  if (!(len >= 1e-13) || !std::isfinite(len)) {
    s.fallback = true;
    return s;
  }
  s.norm = 1.0 / len;
  const double sgn = (f > 0.0 || (f == 0.0 && e >= 0.0)) ? 1.0 : -1.0;
  s.ce = sgn * e / len;
  s.cplus = sgn * std::sqrt(2.0) * e * f / len;
  s.cg = sgn * f / len;
  return s;
}

void numeric_fallback(const PairModel& m, double v, LadderState& s) {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(3, 3);
  block(0, 0) = v - m.detuning;
  block(2, 2) = m.detuning;
  block(0, 1) = block(1, 0) = h;
  block(1, 2) = block(2, 1) = h;
  const HermitianEigen eig = jacobi_eigen(block);
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < 3; ++k)
    if (std::abs(eig.values(k) - s.energy) < std::abs(eig.values(best) - s.energy)) best = k;
  Eigen::Vector3cd vec = eig.vectors.col(best);
  const Eigen::Index anchor = std::abs(vec(2)) > 1e-300 ? 2 : 0;
  vec *= std::conj(vec(anchor)) / std::abs(vec(anchor));
  s.ce = vec(0).real();
  s.cplus = vec(1).real();
  s.cg = vec(2).real();
}

}  // namespace

LadderState ladder_state(const PairModel& m, double rho, Label label) {
  const double v = m.shift(rho);
  const Spectrum spec = eigenvalues_analytic(1.0, m.detuning, v);
  LadderState s = ladder_from_energy(m, v, spec.energy(label));
  if (s.fallback) numeric_fallback(m, v, s);
  return s;
}

std::array<LadderState, 3> ladder_states(const PairModel& m, double rho) {
  const double v = m.shift(rho);
  const Spectrum spec = eigenvalues_analytic(1.0, m.detuning, v);
  std::array<LadderState, 3> out;
  for (int k = 0; k < 3; ++k) {
    out[k] = ladder_from_energy(m, v, spec.energy(all_labels[k]));
    if (out[k].fallback) numeric_fallback(m, v, out[k]);
  }
  return out;
}

EigenState eigensystem(const PairModel& m, const PairConfiguration& config, Label label) {
  const LadderState s = ladder_state(m, config.separation(), label);
  const cd omega = rabi_phasor(m);
  const cd p = plane_wave(m, config.position_a + config.position_b);
  EigenState out;
  out.label = label;
  out.energy = s.energy;
  out.cal_e = s.cal_e;
  out.cal_f = s.cal_f;
  out.norm = s.norm;
  out.fallback = s.fallback;
  out.coefficients << 0.0, omega * p * s.ce, s.cplus, std::conj(omega) * s.cg;
  return out;
}

Eigen::Vector4cd product_state(const PairModel& m, const PairConfiguration& config, Label label) {
  const LadderState s = ladder_state(m, config.separation(), label);
  const cd omega = rabi_phasor(m);
  const cd pa = plane_wave(m, config.position_a), pb = plane_wave(m, config.position_b);
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v;
  v << omega * pa * pb * s.ce, h * s.cplus * pa, h * s.cplus * pb, std::conj(omega) * s.cg;
  return v;
}

Eigen::Vector4cd psi_minus_product(const PairModel& m, const PairConfiguration& config) {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v;
  v << 0.0, h * plane_wave(m, config.position_a), -h * plane_wave(m, config.position_b), 0.0;
  return v;
}

}  // namespace rydgauge
