#include "core/validation.hpp"

#include "core/analysis.hpp"
#include "core/com_frame.hpp"
#include "core/dynamics.hpp"
#include "core/gauge_fields.hpp"
#include "core/jacobi.hpp"
#include "core/oracles.hpp"
#include "core/regimes.hpp"
#include "core/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace rydgauge {

namespace {

constexpr std::array<InteractionKind, 2> kinds{InteractionKind::rdd, InteractionKind::vdw};
constexpr std::array<double, 5> grid_detunings{-3.0, -2.0, -1.0, 0.0, 1.0};
constexpr double gaetan_kappa = 167.6;

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

CheckResult bound(std::string name, double worst, double tol, std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.value = worst;
  r.tolerance = tol;
  r.passed = std::isfinite(worst) && worst < tol;
  r.detail = std::move(detail);
  return r;
}

PairConfiguration oblique(double rho) {
  PairConfiguration c;
  c.position_b = Vec3(0.013, -0.021, 0.034);
  c.position_a = c.position_b + rho * Vec3(0.6, 0.3, std::sqrt(0.55));
  return c;
}

CheckResult eigen_oracle(int draws) {
  std::mt19937_64 rng(20130901);
  std::uniform_real_distribution<double> det(-5.0, 5.0), shift(-100.0, 100.0);
  double worst = 0.0;
  for (int n = 0; n < draws; ++n) {
    PairModel m = reduced_model(det(rng), InteractionKind::rdd, 1);
    const double v = shift(rng);
    // Place the pair so that V(rho) equals the drawn shift.
    m.sign = v < 0 ? -1 : 1;
    const double rho = std::cbrt(m.lambda() / std::abs(v));
    PairConfiguration c;
    c.position_a = Vec3(rho, 0.0, 0.0);
    m.kappa = 3.7;
    const Spectrum s = eigenvalues_analytic(1.0, m.detuning, m.shift(rho));
    const auto num = eigenvalues_numeric(build_hamiltonian(m, c));
    std::array<double, 4> ana{s.e0, s.e1, s.eplus, s.eminus};
    std::sort(ana.begin(), ana.end());
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(ana[k] - num[k]) / std::max(std::abs(num[k]), 1.0));
  }
  return bound("eigenvalues_analytic_vs_jacobi", worst, 1e-10, std::to_string(draws) + " random draws");
}

CheckResult label_rule(int draws) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> det(-5.0, 5.0), shift(-100.0, 100.0);
  int mismatches = 0;
  for (int n = 0; n < draws; ++n) {
    const double d = det(rng), v = shift(rng);
    const Spectrum s = eigenvalues_analytic(1.0, d, v);
    const LabelAssignment a = assign_labels({s.eplus, s.e1, s.eminus}, 1.0, d, v);
    if (a.degenerate) continue;
    if (a.spectrum.e1 != s.e1 || a.spectrum.eplus != s.eplus || a.spectrum.eminus != s.eminus) ++mismatches;
  }
  const Spectrum base = eigenvalues_analytic(1.0, 0.0, 0.0);
  const bool convention = std::abs(base.e1 - 1.0) < 1e-14 && std::abs(base.eplus + 1.0) < 1e-14 &&
                          std::abs(base.eminus) < 1e-14;
  CheckResult r = bound("branch_labels_match_root_order", mismatches + (convention ? 0 : 1), 0.5,
                        "E1=+1, E+=-1, E-=0 at V=delta=0");
  return r;
}

CheckResult eigenvectors(int draws) {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> det(-5.0, 5.0), rr(0.05, 5.0), ph(-3.0, 3.0);
  double worst = 0.0;
  for (int n = 0; n < draws; ++n) {
    PairModel m = reduced_model(det(rng), n % 2 ? InteractionKind::rdd : InteractionKind::vdw, n % 3 ? -1 : 1, 5.0);
    m.rabi_phase = ph(rng);
    PairConfiguration c = oblique(rr(rng));
    const Eigen::Matrix4cd h = build_hamiltonian(m, c);
    const double scale = std::max(h.norm(), 1.0);
    Eigen::Matrix4cd basis;
    basis.col(0) << 1.0, 0.0, 0.0, 0.0;
    for (int k = 0; k < 3; ++k) {
      const EigenState e = eigensystem(m, c, all_labels[k]);
      basis.col(k + 1) = e.coefficients;
      worst = std::max(worst, (h * e.coefficients - e.energy * e.coefficients).norm() / scale * 1e-2);
    }
    const double ortho = (basis.adjoint() * basis - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff();
    worst = std::max(worst, ortho);
  }
  return bound("eigenvectors_orthonormal_and_residual", worst, 1e-12,
               "orthonormality 1e-12, residual 1e-10 ||H|| (scaled)");
}

CheckResult hellmann_feynman(int draws) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> det(-5.0, 5.0), shift(-50.0, 50.0);
  double worst = 0.0;
  for (int n = 0; n < draws; ++n) {
    const double d = det(rng), v = shift(rng);
    PairModel m = reduced_model(d, InteractionKind::rdd, v < 0 ? -1 : 1);
    const double rho = std::cbrt(m.lambda() / std::abs(v));
    for (Label l : all_labels) {
      const LadderState s = ladder_state(m, rho, l);
      const double h = 1e-5 * std::max(1.0, std::abs(v));
      const double fd = (eigenvalues_analytic(1.0, d, v + h).energy(l) - eigenvalues_analytic(1.0, d, v - h).energy(l)) /
                        (2.0 * h);
      worst = std::max(worst, std::abs(fd - s.ce * s.ce) / std::max(s.ce * s.ce, 1e-3));
    }
  }
  return bound("hellmann_feynman_dE_dV", worst, 1e-6);
}

template <typename F>
double over_grid(int points, F&& f) {
  double worst = 0.0;
  for (InteractionKind kind : kinds)
    for (double d : grid_detunings)
      for (Label l : all_labels) {
        const PairModel m = reduced_model(d, kind, -1, gaetan_kappa);
        for (double rho : log_grid(0.1, 10.0, points)) worst = std::max(worst, f(m, l, rho));
      }
  return worst;
}

CheckResult berry_oracle(int points) {
  const double worst = over_grid(points, [](const PairModel& m, Label l, double rho) {
    const PairConfiguration c = oblique(rho);
    const oracle::BerryResult b = oracle::berry_connection_fd(m, l, c);
    const Vec3 closed = vector_potential_vector(m, l, rho);
    return b.flagged ? 1.0 : (b.A - closed).norm() / closed.norm();
  });
  return bound("berry_connection_fd_vs_closed_form", worst, 1e-6);
}

CheckResult scalar_oracle(int points) {
  const double worst = over_grid(points, [](const PairModel& m, Label l, double rho) {
    const double fd = oracle::scalar_potential_fd(m, l, oblique(rho));
    const double closed = scalar_potential(m, l, rho);
    return std::abs(fd - closed) / std::abs(closed);
  });
  return bound("scalar_potential_fd_vs_closed_form", worst, 1e-6);
}

CheckResult variance_form(int points) {
  const double worst = over_grid(points, [](const PairModel& m, Label l, double rho) {
    const PairConfiguration c = oblique(rho);
    const double var = oracle::momentum_variance_fd(m, l, c);
    const double closed = scalar_potential(m, l, rho);
    const double mean = -oracle::berry_connection_fd(m, l, c).A.dot(m.k_dir);
    // <p> = -A: compare against the closed-form A as well.
    return std::max(std::abs(var - closed) / std::max(closed, 1e-6),
                    std::abs(mean + vector_potential(m, l, rho)) / std::max(std::abs(mean), 1e-6));
  });
  return bound("momentum_mean_and_variance_form", worst, 1e-6, "relative, floor 1e-6");
}

CheckResult field_derivative(int points) {
  const double worst = over_grid(points, [](const PairModel& m, Label l, double rho) {
    const double a = b_phi(m, l, rho), f = b_phi_fd(m, l, rho);
    return std::abs(a - f) / (1e-2 + std::abs(a));
  });
  return bound("b_phi_perturbative_vs_richardson", worst, 1e-6, "|dB| / (1e-2 + |B|)");
}

CheckResult plateaus() {
  double worst = 0.0;
  for (InteractionKind kind : kinds) {
    const PairModel m = reduced_model(0.0, kind, -1);
    std::array<double, 3> near{}, far{};
    for (int k = 0; k < 3; ++k) {
      near[k] = vector_potential(m, all_labels[k], 0.02);
      far[k] = vector_potential(m, all_labels[k], 50.0);
      worst = std::max(worst, std::abs(far[k] + 0.5));
    }
    std::sort(near.begin(), near.end());
    worst = std::max({worst, std::abs(near[0] + 1.0), std::abs(near[1] + 0.25), std::abs(near[2] + 0.25)});
  }
  return bound("vector_potential_plateaus", worst, 1e-3, "delta=0, r=0.02 and 50 r_c");
}

CheckResult single_atom_limit() {
  double worst = 0.0;
  for (double d : grid_detunings) {
    const PairModel m = reduced_model(d, InteractionKind::rdd, -1);
    const double rho = 1e4;
    const SingleAtomGauge up = single_atom_gauge(d, +1), dn = single_atom_gauge(d, -1);
    worst = std::max(worst, std::abs(vector_potential(m, Label::one, rho) - up.A.z()));
    worst = std::max(worst, std::abs(vector_potential(m, Label::plus, rho) - dn.A.z()));
    worst = std::max(worst, std::abs(vector_potential(m, Label::minus, rho) + 0.5));
    for (Label l : {Label::one, Label::plus})
      worst = std::max(worst, std::abs(scalar_potential(m, l, rho) - up.phi));
  }
  return bound("noninteracting_limit", worst, 1e-9, "r = 1e4 r_c");
}

CheckResult blockade() {
  double worst = 0.0;
  std::string detail;
  for (InteractionKind kind : kinds)
    for (int sign : {-1, 1}) {
      const PairModel m = reduced_model(0.0, kind, sign);
      const BlockadeCorrespondence map = blockade_correspondence(sign);
      double previous = std::numeric_limits<double>::infinity();
      for (double rho : {0.1, 0.05, 0.02}) {
        double dev = 0.0;
        for (int branch : {+1, -1}) {
          const Label l = branch > 0 ? map.eff_plus : map.eff_minus;
          const double general = vector_potential(m, l, rho);
          dev = std::max(dev, std::abs(blockade_gauge(m, rho, branch).A - general) / std::abs(general));
        }
        if (!(dev < previous)) worst = std::max(worst, 1.0);
        if (rho == 0.05) worst = std::max(worst, dev / 0.01 * 1e-3);
        previous = dev;
      }
    }
  return bound("blockade_vs_general", worst, 1e-3, "1% at 0.05 r_c (scaled) and monotone toward r -> 0");
}

CheckResult weak_order() {
  double worst = 0.0;
  auto ratio_err = [](InteractionKind kind, double rho, double d, Label l) {
    PairModel m = reduced_model(d, kind, -1);
    auto residual = [&](double r) {
      return std::abs(vector_potential(m, l, r) - weak_expansion(d, l, m.shift(r)));
    };
    // Halving V at fixed kind means r -> r * 2^(1/n).
    const double r2 = rho * std::pow(2.0, 1.0 / m.power());
    return std::abs(residual(rho) / residual(r2) - 4.0);
  };
  for (double d : {-2.0, -1.0, 0.5, 1.0})
    for (Label l : all_labels) {
      worst = std::max(worst, ratio_err(InteractionKind::rdd, 20.0, d, l));
      worst = std::max(worst, ratio_err(InteractionKind::vdw, 3.0, d, l));
    }
  return bound("weak_interaction_second_order_residual", worst, 0.4, "ratio 4 under V halving");
}

CheckResult symmetry(int points) {
  double worst = 0.0;
  for (InteractionKind kind : kinds)
    for (double d : grid_detunings) {
      const PairModel m = reduced_model(d, kind, -1);
      const PairModel flipped = reduced_model(-d, kind, +1);
      for (double rho : log_grid(0.1, 10.0, points)) {
        const Vec3 r = rho * Vec3(0.48, -0.6, 0.64);
        worst = std::max(worst, (magnetic_field(m, Label::one, r) - magnetic_field(flipped, Label::plus, r)).norm());
        worst = std::max(worst, (magnetic_field(m, Label::minus, r) - magnetic_field(flipped, Label::minus, r)).norm());
        for (Label l : all_labels) {
          const Vec3 ba = magnetic_field(m, l, r, Atom::a), bb = magnetic_field(m, l, r, Atom::b);
          worst = std::max(worst, (ba + bb).norm());
          worst = std::max({worst, std::abs(ba.dot(r.normalized())), std::abs(ba.dot(m.k_dir))});
        }
      }
    }
  return bound("field_symmetries", worst, 1e-10, "B1<->B+ under (V,delta)->(-V,-delta), B_a=-B_b, azimuthal");
}

CheckResult com_frame_check(int points) {
  double worst = 0.0;
  const double ma = 1.0, mb = 1.7;
  for (InteractionKind kind : kinds)
    for (double d : {-1.0, 0.0, 1.0}) {
      PairModel m = reduced_model(d, kind, -1, 40.0);
      for (double rho : log_grid(0.2, 5.0, points))
        for (Label l : all_labels) {
          const ComScalarPotentials p = com_scalar_potentials(m, l, rho, ma, mb);
          const oracle::ComVariance v = oracle::com_variance_fd(m, l, oblique(rho), ma, mb);
          worst = std::max(worst, std::abs(p.phi_R - v.phi_R) / std::max(v.phi_R, 1e-6));
          worst = std::max(worst, std::abs(p.phi_r - v.phi_r) / std::max(v.phi_r, 1e-6));
          // Variance additivity in energy units hbar^2 k^2 / 2.
          const double phi = scalar_potential(m, l, rho);
          const double lab = phi / ma + phi / mb;
          const double com = p.phi_R / (ma + mb) + p.phi_r * (ma + mb) / (ma * mb);
          worst = std::max(worst, std::abs(lab - com) / lab);
        }
    }
  return bound("com_scalar_potentials_vs_variance", worst, 1e-6, "relative, floor 1e-6");
}

CheckResult presets_check() {
  const ExperimentPreset& g = find_preset("gaetan2009");
  const PhysicalSystem s = make_system(g.drive, g.interaction);
  const double rc = s.units.length_unit * 1e6, b0 = s.units.field_unit * 1e3;
  double worst = std::max(std::abs(rc - 7.9) / 0.4, std::abs(b0 - 1.8) / 0.2);
  const ExperimentPreset& b = find_preset("beguin2013");
  for (double rabi : b.rabi_range)
    for (double c6 : b.coefficient_range) {
      DriveParams dp = b.drive;
      dp.rabi_magnitude = rabi;
      const InteractionModel im{InteractionKind::vdw, -c6};
      const double r = crossover_distance(im, dp) * 1e6;
      const double f = characteristic_field(dp, r * 1e-6) * 1e3;
      if (r < 3.2 || r > 17.0 || f < 0.7 || f > 4.4) worst = std::max(worst, 2.0);
    }
  return bound("preset_scales", worst, 1.0, fmt("gaetan2009 r_c=%.4f um, B0=%.4f mT", rc, b0));
}

CheckResult effective_theory() {
  double worst = 0.0;
  for (double d : {-1.0, 0.0, 0.7})
    for (double rho : {0.05, 0.1}) {
      const PairModel m = reduced_model(d, InteractionKind::rdd, -1);
      const Eigen::Matrix3cd h = effective_hamiltonian(m, rho);
      const BlockadeEffective b = blockade_effective(m, rho);
      worst = std::max(worst, std::abs(h.trace().real() + b.gamma));
      const HermitianEigen e = jacobi_eigen(h);
      std::array<double, 3> expect{b.e0, b.eplus, b.eminus};
      std::sort(expect.begin(), expect.end());
      for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(e.values(k) - expect[k]));
    }
  return bound("effective_hamiltonian_spectrum", worst, 1e-12);
}

CheckResult scaling_check() {
  double worst = 0.0;
  std::string detail;
  const std::vector<double> ds{-10.0, -20.0, -40.0};
  for (InteractionKind kind : kinds) {
    const PairModel m = reduced_model(0.0, kind, -1);
    const bool rdd = kind == InteractionKind::rdd;
    const double b1 = (rdd ? 3.0 / 4.0 : 3.0 / 2.0) / std::sqrt(2.0);
    const double bp = rdd ? 3.0 * std::cbrt(2.0) : 6.0 * std::pow(2.0, 1.0 / 6.0);
    const double gp = rdd ? std::pow(2.0, -1.0 / 3.0) : std::pow(2.0, -1.0 / 6.0);
    const ScalingReport one = scaling_fit(m, Label::one, Extremum::min, ds);
    const ScalingReport plus = scaling_fit(m, Label::plus, Extremum::max, ds);
    worst = std::max(worst, std::abs(one.prefactor / b1 - 1.0) / 0.03);
    worst = std::max(worst, std::abs(plus.prefactor / bp - 1.0) / 0.03);
    worst = std::max(worst, std::abs(plus.gamma / gp - 1.0) / 0.02);
  }
  return bound("peak_scaling_coefficients", worst, 1.0, "beta within 3%, gamma within 2% (scaled)");
}

std::vector<CheckResult> trajectory_invariants() {
  const ExperimentPreset& g = find_preset("gaetan2009");
  const PhysicalSystem s = make_system(g.drive, g.interaction);
  std::vector<CheckResult> out;

  TrajectoryConfig c = paper_scenario(s, 0.1, 1.0);
  const TrajectoryResult r = integrate(s, c);
  const double ke0 = kinetic_energy(s, c.velocity);
  double worst = 0.0;
  for (const auto& st : r.states) worst = std::max(worst, std::abs(kinetic_energy(s, st.velocity) / ke0 - 1.0));
  out.push_back(bound("lorentz_kinetic_energy_conservation", worst, 1e-8));

  // Endpoint differences at dt, dt/2, dt/4 over a fixed window.
  auto endpoint = [&](double dt) {
    TrajectoryConfig k = paper_scenario(s, 0.1, 1.0);
    k.max_path_length = 0.0;
    k.max_time = 80e-6;
    k.time_step = dt;
    k.output_stride = 1u << 30;
    return integrate(s, k).states.back().position;
  };
  const Vec3 p1 = endpoint(2e-6), p2 = endpoint(1e-6), p4 = endpoint(0.5e-6);
  const double ratio = (p1 - p2).norm() / (p2 - p4).norm();
  CheckResult order = bound("rk4_order_ratio", std::abs(ratio - 16.0), 8.0, fmt("ratio %.4g, want [8, 32]", ratio));
  order.passed = ratio >= 8.0 && ratio <= 32.0;
  out.push_back(order);

  TrajectoryConfig e = paper_scenario(s, 0.1, 1.0);
  e.switches.adiabatic_potential = true;
  e.max_path_length = 0.0;
  e.max_time = 40e-6;
  const TrajectoryResult re = integrate(s, e);
  const double scale = std::abs(kinetic_energy(s, e.velocity)) + std::abs(label_energy(s, e, e.position));
  const double total0 = kinetic_energy(s, e.velocity) + label_energy(s, e, e.position);
  worst = re.aborted ? 1.0 : 0.0;
  for (const auto& st : re.states)
    worst = std::max(worst, std::abs(kinetic_energy(s, st.velocity) + label_energy(s, e, st.position) - total0) / scale);
  out.push_back(bound("adiabatic_total_energy_conservation", worst, 1e-6, "40 us, relative to |T| + |E|"));

  // (V, delta) -> (-V, -delta) swaps labels 1 and +: label + sees a field of opposite sign,
  // label 1 of the mirrored pair retraces + exactly.
  const PhysicalSystem m = with_interaction_sign(with_detuning_ratio(s, -s.model.detuning), -s.model.sign);
  auto deflection = [](const PhysicalSystem& sys, Label l) {
    TrajectoryConfig k = paper_scenario(sys, 0.1, 1.0);
    k.label = l;
    return integrate(sys, k).states.back().position.z() - k.position.z();
  };
  const double dz = r.states.back().position.z() - c.position.z();
  const double dz_plus = deflection(m, Label::plus), dz_one = deflection(m, Label::one);
  CheckResult mirror = bound("deflection_reverses_under_mirror", std::abs(dz_one - dz) / std::abs(dz), 1e-6,
                             fmt("dz+ %.4g um, mirrored %.4g um", dz * 1e6, dz_plus * 1e6));
  mirror.passed = mirror.passed && dz * dz_plus < 0.0;
  out.push_back(mirror);
  return out;
}

}  // namespace

std::vector<CheckResult> run_validation(bool quick, const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  auto add = [&](CheckResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  const int grid = quick ? 9 : 41;
  add(eigen_oracle(quick ? 2000 : 10000));
  add(label_rule(quick ? 500 : 5000));
  add(eigenvectors(quick ? 200 : 2000));
  add(hellmann_feynman(quick ? 200 : 2000));
  add(berry_oracle(grid));
  add(scalar_oracle(grid));
  add(variance_form(quick ? 5 : 21));
  add(field_derivative(grid));
  add(plateaus());
  add(single_atom_limit());
  add(blockade());
  add(weak_order());
  add(symmetry(grid));
  add(com_frame_check(quick ? 5 : 15));
  add(presets_check());
  add(effective_theory());
  if (!quick) {
    add(scaling_check());
    for (CheckResult& r : trajectory_invariants()) add(std::move(r));
  }
  return out;
}

}  // namespace rydgauge
