#pragma once

#include "core/core_model.hpp"
#include "core/spectrum.hpp"

#include <array>
#include <string>
#include <vector>

namespace rydgauge {

struct ScanRow {
  double rho = 0.0;
  std::array<double, 3> A{};    // labels 1, +, -
  std::array<double, 3> Bphi{};
  std::array<double, 3> phi{};
};

struct ScanTable {
  PairModel model;
  std::vector<ScanRow> rows;
  std::size_t flagged = 0;  // excluded samples
};

// Grid must be positive and strictly increasing.
ScanTable scan_1d(const PairModel& model, const std::vector<double>& grid);

std::vector<double> log_grid(double lo, double hi, std::size_t points);
std::vector<double> linear_grid(double lo, double hi, std::size_t points);

enum class Extremum { max, min };
const char* to_string(Extremum kind);

struct PeakOptions {
  double rmin = 0.05;
  double rmax = 10.0;
  std::size_t points = 400;
  double step_threshold = 0.01;  // max |Delta A| between bracketing samples
  double tolerance = 1e-10;
};

struct PeakReport {
  Label label = Label::plus;
  Extremum kind = Extremum::max;
  double detuning = 0.0;
  bool found = false;
  double r_peak = 0.0;
  double b_peak = 0.0;
  std::size_t samples = 0;  // after refinement
  std::string diagnostics;
};

PeakReport find_peak(const PairModel& model, Label label, Extremum kind, const PeakOptions& options = {});

struct ScalingReport {
  double exponent = 0.0;
  double prefactor = 0.0;  // beta
  double gamma = 0.0;      // r_peak / r_c extrapolated to |delta| -> infinity
  double residual = 0.0;   // RMS relative residual of the power-law fit
  bool low_confidence = false;
  std::vector<PeakReport> peaks;
};

// Throws std::invalid_argument unless >= 3 detunings, one sign, all |delta| >= 10.
ScalingReport scaling_fit(const PairModel& model, Label label, Extremum kind, const std::vector<double>& detunings,
                          const PeakOptions& options = {});

}  // namespace rydgauge
