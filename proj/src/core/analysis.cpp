#include "core/analysis.hpp"

#include "core/gauge_fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rydgauge {

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("log grid needs 0 < lo < hi");
  std::vector<double> g(points);
  if (points == 1) {
    g[0] = lo;
    return g;
  }
  const double ratio = std::log(hi / lo);
  for (std::size_t i = 0; i < points; ++i) g[i] = lo * std::exp(ratio * double(i) / double(points - 1));
  g.back() = hi;
  return g;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
  if (!(hi > lo)) throw std::invalid_argument("linear grid needs lo < hi");
  std::vector<double> g(points);
  if (points == 1) {
    g[0] = lo;
    return g;
  }
  for (std::size_t i = 0; i < points; ++i) g[i] = lo + (hi - lo) * double(i) / double(points - 1);
  g.back() = hi;
  return g;
}

const char* to_string(Extremum kind) { return kind == Extremum::max ? "max" : "min"; }

ScanTable scan_1d(const PairModel& model, const std::vector<double>& grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw std::invalid_argument("scan grid must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw std::invalid_argument("scan grid must be strictly increasing");
  }
  ScanTable t;
  t.model = model;
  t.rows.reserve(grid.size());
  for (double rho : grid) {
    if (sample_flagged(model, rho)) {
      ++t.flagged;
      continue;
    }
    ScanRow row;
    row.rho = rho;
    bool finite = true;
    for (int k = 0; k < 3; ++k) {
      const Label label = all_labels[k];
      row.A[k] = vector_potential(model, label, rho);
      row.Bphi[k] = b_phi(model, label, rho);
      row.phi[k] = scalar_potential(model, label, rho);
      finite = finite && std::isfinite(row.A[k]) && std::isfinite(row.Bphi[k]) && std::isfinite(row.phi[k]);
    }
    if (!finite) {
      ++t.flagged;
      continue;
    }
    t.rows.push_back(row);
  }
  return t;
}

namespace {

// Bisect intervals where A jumps so narrow features are bracketed.
std::vector<double> refined_grid(const PairModel& model, Label label, const PeakOptions& o) {
  const std::vector<double> base = log_grid(o.rmin, o.rmax, o.points);
  std::vector<double> out{base.front()};
  double a_prev = vector_potential(model, label, base.front());
  for (std::size_t i = 1; i < base.size(); ++i) {
    std::vector<std::pair<double, double>> stack{{base[i], vector_potential(model, label, base[i])}};
    while (!stack.empty()) {
      const auto [r, a] = stack.back();
      const double r0 = out.back();
      if (std::abs(a - a_prev) > o.step_threshold && r / r0 - 1.0 > 1e-9) {
        const double mid = std::sqrt(r0 * r);
        stack.emplace_back(mid, vector_potential(model, label, mid));
        continue;
      }
      out.push_back(r);
      a_prev = a;
      stack.pop_back();
    }
  }
  return out;
}

}  // namespace

PeakReport find_peak(const PairModel& model, Label label, Extremum kind, const PeakOptions& o) {
  PeakReport rep;
  rep.label = label;
  rep.kind = kind;
  rep.detuning = model.detuning;
  const double sgn = kind == Extremum::max ? 1.0 : -1.0;
  auto f = [&](double r) { return sgn * b_phi(model, label, r); };

  const std::vector<double> grid = refined_grid(model, label, o);
  rep.samples = grid.size();
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f(grid[i]);

  std::size_t best = 0;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const bool local = vals[i] >= vals[i - 1] && vals[i] >= vals[i + 1] && vals[i] > 0.0;
    if (local && (best == 0 || vals[i] > vals[best])) best = i;
  }
  if (best == 0) {
    rep.diagnostics = "no interior " + std::string(to_string(kind)) + " of B_phi on " + std::to_string(grid.size()) +
                      " samples in [" + std::to_string(o.rmin) + ", " + std::to_string(o.rmax) + "] r_c";
    return rep;
  }

  // Golden-section on the bracket.
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = grid[best - 1], hi = grid[best + 1];
  const double width = hi - lo;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > 1e-7 * width) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = f(x1);
    }
  }
  double peak = 0.5 * (lo + hi);

  // Golden-section stalls near sqrt(eps) of the width; finish on the sign
  // of the central-difference slope.
  const double eps = 1e-6 * width;
  auto slope = [&](double r) { return f(r + eps) - f(r - eps); };
  double a = peak - 1e-3 * width, b = peak + 1e-3 * width;
  if (slope(a) > 0.0 && slope(b) < 0.0) {
    while (b - a > o.tolerance) {
      const double m = 0.5 * (a + b);
      if (slope(m) > 0.0)
        a = m;
      else
        b = m;
    }
    peak = 0.5 * (a + b);
  }
  rep.found = true;
  rep.r_peak = peak;
  rep.b_peak = b_phi(model, label, peak);
  return rep;
}

ScalingReport scaling_fit(const PairModel& model, Label label, Extremum kind, const std::vector<double>& detunings,
                          const PeakOptions& options) {
  if (detunings.size() < 3) throw std::invalid_argument("scaling_fit needs at least 3 detunings");
  for (double d : detunings) {
    if (!(std::abs(d) >= 10.0)) throw std::invalid_argument("scaling_fit needs |delta/Omega| >= 10");
    if ((d > 0.0) != (detunings.front() > 0.0)) throw std::invalid_argument("scaling_fit detunings must share a sign");
  }
  ScalingReport rep;
  std::vector<double> lx, ly, inv, pos;
  for (double d : detunings) {
    PairModel m = model;
    m.detuning = d;
    PeakReport p = find_peak(m, label, kind, options);
    if (!p.found) throw std::invalid_argument("scaling_fit: no " + std::string(to_string(kind)) + " at delta/Omega = " +
                                              std::to_string(d) + " (" + p.diagnostics + ")");
    lx.push_back(std::log(std::abs(d)));
    ly.push_back(std::log(std::abs(p.b_peak)));
    inv.push_back(1.0 / std::abs(d));
    pos.push_back(p.r_peak);
    rep.peaks.push_back(p);
  }
  auto line = [](const std::vector<double>& x, const std::vector<double>& y) {
    const double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sx += x[i];
      sy += y[i];
      sxx += x[i] * x[i];
      sxy += x[i] * y[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return std::pair{slope, (sy - slope * sx) / n};
  };
  const auto [p, c] = line(lx, ly);
  rep.exponent = p;
  rep.prefactor = std::exp(c);
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double model_value = std::exp(c + p * lx[i]);
    const double rel = (std::exp(ly[i]) - model_value) / model_value;
    ss += rel * rel;
  }
  rep.residual = std::sqrt(ss / double(lx.size()));
  rep.low_confidence = rep.residual > 0.05;
  rep.gamma = line(inv, pos).second;
  return rep;
}

}  // namespace rydgauge
