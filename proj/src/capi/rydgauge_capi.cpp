#include "rydgauge/rydgauge.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/analysis.hpp"
#include "core/com_frame.hpp"
#include "core/core_model.hpp"
#include "core/dynamics.hpp"
#include "core/gauge_fields.hpp"
#include "core/regimes.hpp"
#include "core/spectrum.hpp"
#include "core/validation.hpp"

using namespace rydgauge;

struct rg_system {
  PhysicalSystem system;
};

struct rg_trajectory {
  TrajectoryResult result;
};

namespace {

thread_local std::string last_error;

rg_status fail(rg_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps exceptions from the core onto status codes.
template <typename F>
rg_status guarded(F&& body) {
  try {
    body();
    return RG_OK;
  } catch (const std::domain_error& e) {
    return fail(RG_DOMAIN_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RG_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(RG_INTERNAL, e.what());
  } catch (...) {
    return fail(RG_INTERNAL, "unknown error");
  }
}

#define RG_REQUIRE(cond, what) \
  if (!(cond)) return fail(RG_INVALID_ARGUMENT, what)

Label to_label(rg_label l) {
  switch (l) {
    case RG_LABEL_ONE: return Label::one;
    case RG_LABEL_PLUS: return Label::plus;
    case RG_LABEL_MINUS: return Label::minus;
  }
  throw std::invalid_argument("bad state label");
}

rg_label from_label(Label l) {
  switch (l) {
    case Label::one: return RG_LABEL_ONE;
    case Label::plus: return RG_LABEL_PLUS;
    case Label::minus: return RG_LABEL_MINUS;
  }
  return RG_LABEL_ONE;
}

Extremum to_extremum(rg_extremum k) {
  if (k == RG_EXTREMUM_MAX) return Extremum::max;
  if (k == RG_EXTREMUM_MIN) return Extremum::min;
  throw std::invalid_argument("bad extremum kind");
}

void copy3(const Vec3& v, double out[3]) {
  for (int i = 0; i < 3; ++i) out[i] = v[i];
}

Vec3 vec3(const double in[3]) { return Vec3(in[0], in[1], in[2]); }

template <std::size_t N>
void copy_text(const std::string& text, char (&out)[N]) {
  const std::size_t n = std::min(text.size(), N - 1);
  std::memcpy(out, text.data(), n);
  out[n] = '\0';
}

void to_core(const rg_params& p, DriveParams& drive, InteractionModel& interaction) {
  drive.rabi_magnitude = p.rabi_magnitude;
  drive.rabi_phase = p.rabi_phase;
  drive.detuning = p.detuning;
  drive.wavenumber = p.wavenumber;
  const Vec3 k = vec3(p.k_dir);
  if (!(k.norm() > 0.0)) throw std::invalid_argument("k_dir must be nonzero");
  drive.wavevector_direction = k.normalized();
  drive.mass_a = p.mass_a;
  drive.mass_b = p.mass_b;
  if (p.kind != RG_RDD && p.kind != RG_VDW) throw std::invalid_argument("bad interaction kind");
  interaction.kind = p.kind == RG_RDD ? InteractionKind::rdd : InteractionKind::vdw;
  interaction.coefficient = p.coefficient;
}

rg_params from_core(const DriveParams& drive, const InteractionModel& interaction) {
  rg_params p{};
  p.rabi_magnitude = drive.rabi_magnitude;
  p.rabi_phase = drive.rabi_phase;
  p.detuning = drive.detuning;
  p.wavenumber = drive.wavenumber;
  copy3(drive.wavevector_direction, p.k_dir);
  p.mass_a = drive.mass_a;
  p.mass_b = drive.mass_b;
  p.kind = interaction.kind == InteractionKind::rdd ? RG_RDD : RG_VDW;
  p.coefficient = interaction.coefficient;
  return p;
}

PeakOptions to_core(const rg_peak_options* o) {
  PeakOptions out;
  if (!o) return out;
  out.rmin = o->rmin;
  out.rmax = o->rmax;
  out.points = o->points;
  out.step_threshold = o->step_threshold;
  out.tolerance = o->tolerance;
  return out;
}

void from_core(const PeakReport& r, rg_peak& out) {
  out.label = from_label(r.label);
  out.kind = r.kind == Extremum::max ? RG_EXTREMUM_MAX : RG_EXTREMUM_MIN;
  out.detuning_ratio = r.detuning;
  out.found = r.found ? 1 : 0;
  out.r_peak = r.r_peak;
  out.b_peak = r.b_peak;
  out.samples = r.samples;
  copy_text(r.diagnostics, out.diagnostics);
}

TrajectoryConfig to_core(const rg_trajectory_config& c) {
  TrajectoryConfig t;
  t.label = to_label(c.label);
  t.position = vec3(c.position);
  t.velocity = vec3(c.velocity);
  t.pinned = vec3(c.pinned);
  t.charge = c.charge;
  t.time_step = c.time_step;
  t.max_time = c.max_time;
  t.max_path_length = c.max_path_length;
  t.switches.lorentz = c.lorentz != 0;
  t.switches.adiabatic_potential = c.adiabatic_potential != 0;
  t.switches.scalar_gradient = c.scalar_gradient != 0;
  t.background = c.background;
  t.output_stride = c.output_stride;
  return t;
}

rg_trajectory_config from_core(const TrajectoryConfig& t) {
  rg_trajectory_config c{};
  c.label = from_label(t.label);
  copy3(t.position, c.position);
  copy3(t.velocity, c.velocity);
  copy3(t.pinned, c.pinned);
  c.charge = t.charge;
  c.time_step = t.time_step;
  c.max_time = t.max_time;
  c.max_path_length = t.max_path_length;
  c.lorentz = t.switches.lorentz;
  c.adiabatic_potential = t.switches.adiabatic_potential;
  c.scalar_gradient = t.switches.scalar_gradient;
  c.background = t.background;
  c.output_stride = t.output_stride;
  return c;
}

}  // namespace

extern "C" {

const char* rg_version(void) { return "1.0.0"; }

const char* rg_status_string(rg_status status) {
  switch (status) {
    case RG_OK: return "ok";
    case RG_INVALID_ARGUMENT: return "invalid argument";
    case RG_DOMAIN_ERROR: return "domain error";
    case RG_NOT_FOUND: return "not found";
    case RG_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rg_last_error(void) { return last_error.c_str(); }

const char* rg_label_name(rg_label label) {
  switch (label) {
    case RG_LABEL_ONE: return "1";
    case RG_LABEL_PLUS: return "+";
    case RG_LABEL_MINUS: return "-";
  }
  return "?";
}

rg_status rg_parse_label(const char* text, rg_label* out) {
  RG_REQUIRE(text && out, "null argument");
  return guarded([&] { *out = from_label(parse_label(text)); });
}

rg_status rg_system_create(const rg_params* params, rg_system** out) {
  RG_REQUIRE(params && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    DriveParams drive;
    InteractionModel interaction;
    to_core(*params, drive, interaction);
    *out = new rg_system{make_system(drive, interaction)};
  });
}

rg_status rg_system_from_preset(const char* name, rg_system** out) {
  RG_REQUIRE(name && out, "null argument");
  *out = nullptr;
  for (const auto& p : presets())
    if (p.name == name) return guarded([&] { *out = new rg_system{make_system(p.drive, p.interaction)}; });
  return fail(RG_NOT_FOUND, std::string("unknown preset '") + name + "'");
}

rg_status rg_system_clone(const rg_system* system, rg_system** out) {
  RG_REQUIRE(system && out, "null argument");
  return guarded([&] { *out = new rg_system{system->system}; });
}

void rg_system_destroy(rg_system* system) { delete system; }

rg_status rg_system_params(const rg_system* system, rg_params* out) {
  RG_REQUIRE(system && out, "null argument");
  *out = from_core(system->system.drive, system->system.interaction);
  return RG_OK;
}

rg_status rg_system_units(const rg_system* system, rg_units* out) {
  RG_REQUIRE(system && out, "null argument");
  const PhysicalSystem& s = system->system;
  out->frequency = s.units.frequency_unit;
  out->energy = s.units.energy_unit;
  out->length = s.units.length_unit;
  out->vector_potential = s.units.vector_potential_unit;
  out->field = s.units.field_unit;
  out->scalar_potential = s.units.scalar_potential_unit;
  out->time = s.units.time_unit;
  out->kappa = s.model.kappa;
  out->detuning_ratio = s.model.detuning;
  out->sign = s.model.sign;
  return RG_OK;
}

rg_status rg_system_set_detuning_ratio(rg_system* system, double ratio) {
  RG_REQUIRE(system, "null argument");
  return guarded([&] { system->system = with_detuning_ratio(system->system, ratio); });
}

size_t rg_preset_count(void) { return presets().size(); }

rg_status rg_preset_at(size_t index, rg_preset_info* out) {
  RG_REQUIRE(out, "null argument");
  if (index >= presets().size()) return fail(RG_NOT_FOUND, "preset index out of range");
  const ExperimentPreset& p = presets()[index];
  out->name = p.name.c_str();
  out->description = p.description.c_str();
  out->params = from_core(p.drive, p.interaction);
  out->lifetime = p.lifetime;
  out->temperature = p.temperature;
  out->beam_waist = p.beam_waist;
  for (int i = 0; i < 2; ++i) {
    out->rabi_range[i] = p.rabi_range[i];
    out->coefficient_range[i] = p.coefficient_range[i];
  }
  return RG_OK;
}

double rg_mhz_to_angular(double mhz) { return mhz_to_angular(mhz); }
double rg_c3_from_mhz_um3(double value) { return c3_from_mhz_um3(value); }
double rg_c6_from_ghz_um6(double value) { return c6_from_ghz_um6(value); }
double rg_atomic_mass_unit(void) { return constants::atomic_mass_unit; }
double rg_boltzmann(void) { return constants::boltzmann; }

rg_status rg_eigenvalues(double detuning_ratio, double shift, double out[4]) {
  RG_REQUIRE(out, "null argument");
  return guarded([&] {
    const Spectrum s = eigenvalues_analytic(1.0, detuning_ratio, shift);
    out[0] = s.e0;
    out[1] = s.e1;
    out[2] = s.eplus;
    out[3] = s.eminus;
  });
}

rg_status rg_gauge_at(const rg_system* system, rg_label label, double rho, rg_gauge* out) {
  RG_REQUIRE(system && out, "null argument");
  RG_REQUIRE(rho > 0.0, "rho must be positive");
  return guarded([&] {
    const PairModel& m = system->system.model;
    const Label l = to_label(label);
    out->A = vector_potential(m, l, rho);
    out->b_phi = b_phi(m, l, rho);
    out->phi = scalar_potential(m, l, rho);
    out->flagged = sample_flagged(m, rho) ? 1 : 0;
  });
}

rg_status rg_magnetic_field(const rg_system* system, rg_label label, const double r_vec[3], int atom, double out[3]) {
  RG_REQUIRE(system && r_vec && out, "null argument");
  RG_REQUIRE(atom == 0 || atom == 1, "atom must be 0 (a) or 1 (b)");
  return guarded([&] {
    copy3(magnetic_field(system->system.model, to_label(label), vec3(r_vec), atom == 0 ? Atom::a : Atom::b), out);
  });
}

rg_status rg_log_grid(double lo, double hi, size_t points, double* out) {
  RG_REQUIRE(out || points == 0, "null argument");
  return guarded([&] {
    const std::vector<double> g = log_grid(lo, hi, points);
    std::copy(g.begin(), g.end(), out);
  });
}

rg_status rg_linear_grid(double lo, double hi, size_t points, double* out) {
  RG_REQUIRE(out || points == 0, "null argument");
  return guarded([&] {
    const std::vector<double> g = linear_grid(lo, hi, points);
    std::copy(g.begin(), g.end(), out);
  });
}

rg_status rg_scan(const rg_system* system, const double* grid, size_t n, rg_scan_row* rows, size_t* written,
                  size_t* flagged) {
  RG_REQUIRE(system && (n == 0 || (grid && rows)) && written, "null argument");
  return guarded([&] {
    const ScanTable t = scan_1d(system->system.model, std::vector<double>(grid, grid + n));
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      rows[i].rho = t.rows[i].rho;
      for (int k = 0; k < 3; ++k) {
        rows[i].A[k] = t.rows[i].A[k];
        rows[i].b_phi[k] = t.rows[i].Bphi[k];
        rows[i].phi[k] = t.rows[i].phi[k];
      }
    }
    *written = t.rows.size();
    if (flagged) *flagged = t.flagged;
  });
}

rg_status rg_field_map(const rg_system* system, rg_label label, const double* xs, size_t nx, const double* zs,
                       size_t nz, rg_map_sample* out) {
  RG_REQUIRE(system && xs && zs && out, "null argument");
  return guarded([&] {
    const std::vector<GaugeSample> samples = field_map(system->system.model, to_label(label),
                                                       std::vector<double>(xs, xs + nx),
                                                       std::vector<double>(zs, zs + nz));
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const GaugeSample& s = samples[i];
      out[i].x = xs[i % nx];
      out[i].z = zs[i / nx];
      out[i].rho = s.rho;
      copy3(s.A, out[i].A);
      out[i].phi = s.phi;
      copy3(s.B, out[i].B);
      out[i].flagged = s.flagged ? 1 : 0;
    }
  });
}

void rg_peak_options_default(rg_peak_options* out) {
  if (!out) return;
  const PeakOptions d;
  out->rmin = d.rmin;
  out->rmax = d.rmax;
  out->points = d.points;
  out->step_threshold = d.step_threshold;
  out->tolerance = d.tolerance;
}

rg_status rg_find_peak(const rg_system* system, rg_label label, rg_extremum kind, const rg_peak_options* options,
                       rg_peak* out) {
  RG_REQUIRE(system && out, "null argument");
  return guarded([&] {
    from_core(find_peak(system->system.model, to_label(label), to_extremum(kind), to_core(options)), *out);
  });
}

rg_status rg_scaling_fit(const rg_system* system, rg_label label, rg_extremum kind, const double* detunings,
                         size_t n, const rg_peak_options* options, rg_scaling* out, rg_peak* peaks) {
  RG_REQUIRE(system && detunings && out, "null argument");
  return guarded([&] {
    const ScalingReport r = scaling_fit(system->system.model, to_label(label), to_extremum(kind),
                                        std::vector<double>(detunings, detunings + n), to_core(options));
    out->exponent = r.exponent;
    out->prefactor = r.prefactor;
    out->gamma = r.gamma;
    out->residual = r.residual;
    out->low_confidence = r.low_confidence ? 1 : 0;
    if (peaks)
      for (std::size_t i = 0; i < r.peaks.size() && i < n; ++i) from_core(r.peaks[i], peaks[i]);
  });
}

rg_status rg_antiblockade_distances(const rg_system* system, rg_antiblockade* out) {
  RG_REQUIRE(system && out, "null argument");
  return guarded([&] {
    const AntiblockadeDistances d = antiblockade_distances(system->system.model);
    out->has_single_photon = d.single_photon.has_value();
    out->single_photon = d.single_photon.value_or(0.0);
    out->has_two_photon = d.two_photon.has_value();
    out->two_photon = d.two_photon.value_or(0.0);
    copy_text(d.reason, out->reason);
  });
}

rg_status rg_blockade_gauge(const rg_system* system, double rho, int branch, rg_blockade* out) {
  RG_REQUIRE(system && out, "null argument");
  RG_REQUIRE(branch == 1 || branch == -1, "branch must be +1 or -1");
  return guarded([&] {
    const BlockadeGauge g = blockade_gauge(system->system.model, rho, branch);
    out->A = g.A;
    out->phi = g.phi;
    out->valid = g.valid ? 1 : 0;
  });
}

rg_status rg_weak_expansion(double detuning_ratio, rg_label label, double shift, double* out) {
  RG_REQUIRE(out, "null argument");
  return guarded([&] { *out = weak_expansion(detuning_ratio, to_label(label), shift); });
}

rg_status rg_com_scalar_potentials(const rg_system* system, rg_label label, double rho, double* phi_R,
                                   double* phi_r) {
  RG_REQUIRE(system && phi_R && phi_r, "null argument");
  return guarded([&] {
    const PhysicalSystem& s = system->system;
    const ComScalarPotentials p = com_scalar_potentials(s.model, to_label(label), rho, s.drive.mass_a, s.drive.mass_b);
    *phi_R = p.phi_R;
    *phi_r = p.phi_r;
  });
}

rg_status rg_trajectory_defaults(rg_trajectory_config* out) {
  RG_REQUIRE(out, "null argument");
  *out = from_core(TrajectoryConfig{});
  return RG_OK;
}

rg_status rg_paper_scenario(const rg_system* system, double speed, double impact_parameter_rc, double path_length_rc,
                            rg_trajectory_config* out) {
  RG_REQUIRE(system && out, "null argument");
  RG_REQUIRE(speed > 0.0 && path_length_rc > 0.0, "speed and path length must be positive");
  return guarded([&] { *out = from_core(paper_scenario(system->system, speed, impact_parameter_rc, path_length_rc)); });
}

rg_status rg_integrate(const rg_system* system, const rg_trajectory_config* config, rg_trajectory** out) {
  RG_REQUIRE(system && config && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new rg_trajectory{integrate(system->system, to_core(*config))}; });
}

void rg_trajectory_destroy(rg_trajectory* trajectory) { delete trajectory; }

rg_status rg_trajectory_summary_get(const rg_trajectory* trajectory, rg_trajectory_summary* out) {
  RG_REQUIRE(trajectory && out, "null argument");
  const TrajectoryResult& r = trajectory->result;
  out->aborted = r.aborted ? 1 : 0;
  out->steps = r.steps;
  out->states = r.states.size();
  out->path_length = r.path_length;
  out->traversal_time = r.traversal_time;
  return RG_OK;
}

rg_status rg_trajectory_state_at(const rg_trajectory* trajectory, size_t index, rg_trajectory_state* out) {
  RG_REQUIRE(trajectory && out, "null argument");
  if (index >= trajectory->result.states.size()) return fail(RG_NOT_FOUND, "state index out of range");
  const TrajectoryState& s = trajectory->result.states[index];
  out->t = s.t;
  copy3(s.position, out->position);
  copy3(s.velocity, out->velocity);
  out->energy_label = s.energy_label;
  out->adiabaticity = s.adiabaticity;
  out->adiabaticity_infinite = s.adiabaticity_infinite ? 1 : 0;
  return RG_OK;
}

const char* rg_trajectory_reason(const rg_trajectory* trajectory) {
  return trajectory ? trajectory->result.reason.c_str() : "";
}

rg_status rg_validate(int quick, rg_check_callback callback, void* user, int* passed, int* failed) {
  int ok = 0, bad = 0;
  const rg_status status = guarded([&] {
    run_validation(quick != 0, [&](const CheckResult& r) {
      (r.passed ? ok : bad) += 1;
      if (!callback) return;
      const rg_check c{r.name.c_str(), r.passed ? 1 : 0, r.value, r.tolerance, r.detail.c_str()};
      callback(&c, user);
    });
  });
  if (passed) *passed = ok;
  if (failed) *failed = bad;
  return status;
}

}  // extern "C"
