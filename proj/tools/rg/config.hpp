#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rydgauge/rydgauge.h"

namespace rg {

// Bad input from the user: unknown key, malformed value, inconsistent settings.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string preset;
  std::optional<std::string> interaction;  // "rdd" or "vdw"
  std::optional<double> rabi_mhz;
  std::optional<double> rabi_phase;
  std::optional<double> detuning_ratio;
  std::optional<double> c3_mhz_um3;
  std::optional<double> c6_ghz_um6;
  std::optional<double> wavelength_nm;
  std::optional<double> mass_u;
  std::optional<double> mass_b_u;

  std::vector<rg_label> labels{RG_LABEL_ONE, RG_LABEL_PLUS, RG_LABEL_MINUS};
  bool labels_given = false;
  double rmin = 0.1;
  double rmax = 5.0;
  std::size_t points = 400;
  std::string grid = "log";

  double xmin = -2.0, xmax = 2.0, zmin = -2.0, zmax = 2.0;
  std::size_t nx = 41, nz = 41;

  std::string extremum = "both";
  std::vector<double> detunings{-10.0, -20.0, -40.0};

  double speed = 0.10;
  double impact_parameter_rc = 1.0;
  double path_length_rc = 2.0;
  std::optional<double> time_step_ns;
  std::optional<double> max_time_us;
  std::optional<std::size_t> output_stride;
  bool lorentz = true;
  bool adiabatic_force = false;
  bool scalar_gradient = false;

  std::string format = "csv";
  std::string output;  // empty: stdout
  bool si = false;
  bool quick = false;
};

struct Entry {
  std::string key;
  std::string value;
  std::string origin;  // "file:line" or "--flag"
};

struct KeyInfo {
  std::string key;
  std::string unit;  // accepted suffix, empty when dimensionless
  std::string help;
};

const std::vector<KeyInfo>& config_keys();

// key = value lines, '#' starts a comment.
std::vector<Entry> parse_config_text(const std::string& text, const std::string& source);
std::vector<Entry> read_config_file(const std::string& path);

// Entries apply in order, so flags listed after file entries take precedence.
// require_system: the physical parameters must be complete.
RunConfig build_config(const std::vector<Entry>& entries, bool require_system = true);

struct SystemDeleter {
  void operator()(rg_system* s) const { rg_system_destroy(s); }
};
using SystemPtr = std::unique_ptr<rg_system, SystemDeleter>;

SystemPtr make_system(const RunConfig& config);

}  // namespace rg
