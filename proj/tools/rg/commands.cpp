#include "rg/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rg/config.hpp"
#include "rg/output.hpp"

namespace rg {
namespace {

struct LibraryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void ok(rg_status s) {
  if (s != RG_OK) throw LibraryError(std::string(rg_status_string(s)) + ": " + rg_last_error());
}

const std::vector<std::string> boolean_keys{"lorentz", "adiabatic_force", "scalar_gradient", "si", "quick"};

bool is_boolean(const std::string& key) {
  return std::find(boolean_keys.begin(), boolean_keys.end(), key) != boolean_keys.end();
}

std::string flag_name(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return "--" + key;
}

// Every config key doubles as a flag; values stay strings until build_config.
struct FlagSet {
  std::string config_file;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> on, off;

  void attach(CLI::App& app) {
    app.add_option("--config", config_file, "key = value configuration file");
    for (const auto& k : config_keys()) {
      if (is_boolean(k.key)) {
        app.add_flag(flag_name(k.key), on[k.key], k.help);
        if (k.key != "si" && k.key != "quick") app.add_flag("--no-" + flag_name(k.key).substr(2), off[k.key]);
      } else {
        std::string help = k.help;
        if (!k.unit.empty()) help += " [" + k.unit + "]";
        app.add_option(flag_name(k.key), values[k.key], help)->allow_extra_args(false);
      }
    }
  }

  RunConfig resolve(const CLI::App& app, bool require_system) const {
    std::vector<Entry> entries;
    if (!config_file.empty()) entries = read_config_file(config_file);
    for (const auto& k : config_keys()) {
      const std::string flag = flag_name(k.key);
      if (is_boolean(k.key)) {
        if (on.at(k.key)) entries.push_back({k.key, "true", flag});
        if (off.count(k.key) && off.at(k.key)) entries.push_back({k.key, "false", "--no-" + flag.substr(2)});
      } else if (app.count(flag) > 0) {
        entries.push_back({k.key, values.at(k.key), flag});
      }
    }
    return build_config(entries, require_system);
  }
};

struct Context {
  RunConfig config;
  SystemPtr system;
  rg_params params{};
  rg_units units{};
};

Context open(const RunConfig& config) {
  Context c;
  c.config = config;
  c.system = make_system(config);
  ok(rg_system_params(c.system.get(), &c.params));
  ok(rg_system_units(c.system.get(), &c.units));
  return c;
}

nlohmann::ordered_json system_metadata(const Context& c, const char* command) {
  nlohmann::ordered_json m;
  m["command"] = command;
  m["version"] = rg_version();
  m["preset"] = c.config.preset;
  m["interaction"] = c.params.kind == RG_RDD ? "rdd" : "vdw";
  m["rabi_rad_s"] = c.params.rabi_magnitude;
  m["detuning_ratio"] = c.units.detuning_ratio;
  m["coefficient_si"] = c.params.coefficient;
  m["wavenumber_per_m"] = c.params.wavenumber;
  m["kappa"] = c.units.kappa;
  m["r_c_m"] = c.units.length;
  m["B0_T"] = c.units.field;
  m["A_unit_kg_m_s"] = c.units.vector_potential;
  m["phi_unit_J"] = c.units.scalar_potential;
  m["units"] = c.config.si ? "si" : "natural";
  return m;
}

std::vector<double> grid(const RunConfig& c) {
  std::vector<double> g(c.points);
  if (c.grid == "linear") ok(rg_linear_grid(c.rmin, c.rmax, c.points, g.data()));
  else ok(rg_log_grid(c.rmin, c.rmax, c.points, g.data()));
  return g;
}

std::string label_column(rg_label l) {
  switch (l) {
    case RG_LABEL_ONE: return "1";
    case RG_LABEL_PLUS: return "plus";
    case RG_LABEL_MINUS: return "minus";
  }
  return "?";
}

std::vector<rg_extremum> extrema(const RunConfig& c) {
  if (c.extremum == "max") return {RG_EXTREMUM_MAX};
  if (c.extremum == "min") return {RG_EXTREMUM_MIN};
  return {RG_EXTREMUM_MAX, RG_EXTREMUM_MIN};
}

const char* extremum_name(rg_extremum k) { return k == RG_EXTREMUM_MAX ? "max" : "min"; }

int cmd_scan(const RunConfig& config) {
  const Context c = open(config);
  const std::vector<double> g = grid(config);
  std::vector<rg_scan_row> rows(g.size());
  size_t written = 0, flagged = 0;
  ok(rg_scan(c.system.get(), g.data(), g.size(), rows.data(), &written, &flagged));

  Table t;
  const bool si = config.si;
  t.columns = {si ? "r_m" : "r_over_rc"};
  for (const char* q : {"A", "Bphi", "phi"})
    for (rg_label l : {RG_LABEL_ONE, RG_LABEL_PLUS, RG_LABEL_MINUS}) {
      std::string name = q + label_column(l);
      if (si) name += std::string(q) == "A" ? "_kg_m_s" : std::string(q) == "Bphi" ? "_T" : "_J";
      t.columns.push_back(name);
    }
  const double r_unit = si ? c.units.length : 1.0, a_unit = si ? c.units.vector_potential : 1.0;
  const double b_unit = si ? c.units.field : 1.0, phi_unit = si ? c.units.scalar_potential : 1.0;
  for (std::size_t i = 0; i < written; ++i) {
    std::vector<Cell> row{rows[i].rho * r_unit};
    for (int k = 0; k < 3; ++k) row.push_back(rows[i].A[k] * a_unit);
    for (int k = 0; k < 3; ++k) row.push_back(rows[i].b_phi[k] * b_unit);
    for (int k = 0; k < 3; ++k) row.push_back(rows[i].phi[k] * phi_unit);
    t.rows.push_back(std::move(row));
  }
  t.metadata = system_metadata(c, "scan");
  t.metadata["grid"] = config.grid;
  t.metadata["rmin"] = config.rmin;
  t.metadata["rmax"] = config.rmax;
  t.metadata["points"] = config.points;
  t.metadata["flagged"] = flagged;
  emit(t, config.format, config.output);
  return exit_ok;
}

int cmd_map(const RunConfig& config) {
  const Context c = open(config);
  std::vector<double> xs(config.nx), zs(config.nz);
  ok(rg_linear_grid(config.xmin, config.xmax, config.nx, xs.data()));
  ok(rg_linear_grid(config.zmin, config.zmax, config.nz, zs.data()));
  const bool si = config.si;
  const double r_unit = si ? c.units.length : 1.0, a_unit = si ? c.units.vector_potential : 1.0;
  const double b_unit = si ? c.units.field : 1.0, phi_unit = si ? c.units.scalar_potential : 1.0;

  Table t;
  if (si) t.columns = {"label", "x_m", "z_m", "r_m", "Ax_kg_m_s", "Ay_kg_m_s", "Az_kg_m_s", "phi_J", "Bx_T", "By_T",
                       "Bz_T", "flagged"};
  else t.columns = {"label", "x_over_rc", "z_over_rc", "r_over_rc", "Ax", "Ay", "Az", "phi", "Bx", "By", "Bz", "flagged"};
  std::vector<rg_map_sample> samples(xs.size() * zs.size());
  for (rg_label l : config.labels) {
    ok(rg_field_map(c.system.get(), l, xs.data(), xs.size(), zs.data(), zs.size(), samples.data()));
    for (const auto& s : samples) {
      t.rows.push_back({std::string(rg_label_name(l)), s.x * r_unit, s.z * r_unit, s.rho * r_unit, s.A[0] * a_unit,
                        s.A[1] * a_unit, s.A[2] * a_unit, s.phi * phi_unit, s.B[0] * b_unit, s.B[1] * b_unit,
                        s.B[2] * b_unit, static_cast<long long>(s.flagged)});
    }
  }
  t.metadata = system_metadata(c, "map");
  t.metadata["plane"] = "x transverse, z along k_L, atom b at the origin";
  emit(t, config.format, config.output);
  return exit_ok;
}

rg_peak_options peak_options(const RunConfig&) {
  rg_peak_options o;
  rg_peak_options_default(&o);
  return o;
}

int cmd_peaks(const RunConfig& config) {
  const Context c = open(config);
  const rg_peak_options o = peak_options(config);
  const bool si = config.si;
  Table t;
  t.columns = {"label", "kind", "detuning_ratio", "found", si ? "r_m" : "r_over_rc", si ? "b_peak_T" : "b_peak",
               "samples", "diagnostics"};
  for (rg_label l : config.labels)
    for (rg_extremum k : extrema(config)) {
      rg_peak p;
      ok(rg_find_peak(c.system.get(), l, k, &o, &p));
      t.rows.push_back({std::string(rg_label_name(l)), std::string(extremum_name(k)), p.detuning_ratio,
                        static_cast<long long>(p.found), p.r_peak * (si ? c.units.length : 1.0),
                        p.b_peak * (si ? c.units.field : 1.0), static_cast<long long>(p.samples),
                        std::string(p.diagnostics)});
    }
  t.metadata = system_metadata(c, "peaks");
  t.metadata["rmin"] = o.rmin;
  t.metadata["rmax"] = o.rmax;
  emit(t, config.format, config.output);
  return exit_ok;
}

int cmd_scaling(const RunConfig& config) {
  const Context c = open(config);
  const rg_peak_options o = peak_options(config);
  const std::vector<double>& ds = config.detunings;
  Table t;
  t.columns = {"label", "kind", "exponent", "beta", "gamma", "residual", "low_confidence"};
  nlohmann::ordered_json peaks = nlohmann::ordered_json::array();
  for (rg_label l : config.labels)
    for (rg_extremum k : extrema(config)) {
      rg_scaling s;
      std::vector<rg_peak> found(ds.size());
      ok(rg_scaling_fit(c.system.get(), l, k, ds.data(), ds.size(), &o, &s, found.data()));
      t.rows.push_back({std::string(rg_label_name(l)), std::string(extremum_name(k)), s.exponent, s.prefactor, s.gamma,
                        s.residual, static_cast<long long>(s.low_confidence)});
      for (const auto& p : found) {
        t.trailer.push_back(std::string(rg_label_name(l)) + " " + extremum_name(k) +
                            " detuning_ratio=" + format_number(p.detuning_ratio) + " r_over_rc=" +
                            format_number(p.r_peak) + " b_peak=" + format_number(p.b_peak));
        peaks.push_back({{"label", rg_label_name(l)},
                         {"kind", extremum_name(k)},
                         {"detuning_ratio", p.detuning_ratio},
                         {"found", p.found != 0},
                         {"r_over_rc", p.r_peak},
                         {"b_peak", p.b_peak}});
      }
    }
  t.metadata = system_metadata(c, "scaling");
  t.metadata["detunings"] = ds;
  t.metadata["peaks"] = std::move(peaks);
  emit(t, config.format, config.output);
  return exit_ok;
}

int cmd_trajectory(const RunConfig& config) {
  const Context c = open(config);
  rg_trajectory_config tc;
  ok(rg_paper_scenario(c.system.get(), config.speed, config.impact_parameter_rc, config.path_length_rc, &tc));
  tc.label = config.labels_given ? config.labels.front() : RG_LABEL_PLUS;
  tc.lorentz = config.lorentz;
  tc.adiabatic_potential = config.adiabatic_force;
  tc.scalar_gradient = config.scalar_gradient;
  if (config.time_step_ns) tc.time_step = *config.time_step_ns * 1e-9;
  if (config.max_time_us) tc.max_time = *config.max_time_us * 1e-6;
  if (config.output_stride) tc.output_stride = *config.output_stride;

  rg_trajectory* raw = nullptr;
  ok(rg_integrate(c.system.get(), &tc, &raw));
  std::unique_ptr<rg_trajectory, void (*)(rg_trajectory*)> traj(raw, rg_trajectory_destroy);
  rg_trajectory_summary sum;
  ok(rg_trajectory_summary_get(traj.get(), &sum));

  Table t;
  t.columns = {"t_s", "x_m", "y_m", "z_m", "vx", "vy", "vz", "adiabaticity"};
  double worst = 0.0;
  rg_trajectory_state s{};
  for (size_t i = 0; i < sum.states; ++i) {
    ok(rg_trajectory_state_at(traj.get(), i, &s));
    const double a = s.adiabaticity_infinite ? INFINITY : s.adiabaticity;
    worst = std::max(worst, a);
    t.rows.push_back({s.t, s.position[0], s.position[1], s.position[2], s.velocity[0], s.velocity[1], s.velocity[2], a});
  }
  const double dz_um = (s.position[2] - tc.position[2]) * 1e6;
  t.metadata = system_metadata(c, "trajectory");
  t.metadata["label"] = rg_label_name(tc.label);
  t.metadata["speed_m_s"] = config.speed;
  t.metadata["impact_parameter_rc"] = config.impact_parameter_rc;
  t.metadata["path_length_rc"] = config.path_length_rc;
  t.metadata["time_step_s"] = tc.time_step;
  t.metadata["forces"] = {{"lorentz", tc.lorentz != 0},
                          {"adiabatic_potential", tc.adiabatic_potential != 0},
                          {"scalar_gradient", tc.scalar_gradient != 0}};
  t.metadata["steps"] = sum.steps;
  t.metadata["aborted"] = sum.aborted != 0;
  t.metadata["reason"] = rg_trajectory_reason(traj.get());
  t.metadata["traversal_time_s"] = sum.traversal_time;
  t.metadata["max_adiabaticity"] = worst;
  t.metadata["z_deflection_um"] = dz_um;

  t.trailer.push_back("steps " + std::to_string(sum.steps));
  if (sum.aborted) t.trailer.push_back(std::string("aborted: ") + rg_trajectory_reason(traj.get()));
  t.trailer.push_back("traversal_time_us " + format_number(sum.traversal_time * 1e6));
  t.trailer.push_back("max_adiabaticity " + format_number(worst));
  t.trailer.push_back("z_deflection_um " + format_number(dz_um));
  emit(t, config.format, config.output);
  return sum.aborted ? exit_failure : exit_ok;
}

int cmd_validate(const RunConfig& config) {
  auto print = [](const rg_check* r, void* user) {
    auto& lines = *static_cast<std::vector<std::string>*>(user);
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s %s %.3e tol %.1e%s%s", r->passed ? "PASS" : "FAIL", r->name, r->value,
                  r->tolerance, *r->detail ? " " : "", r->detail);
    lines.emplace_back(buf);
    std::cout << buf << '\n' << std::flush;
  };
  std::vector<std::string> lines;
  int passed = 0, failed = 0;
  ok(rg_validate(config.quick, print, &lines, &passed, &failed));
  std::cout << "oracles: " << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? exit_ok : exit_failure;
}

int cmd_presets(const RunConfig& config) {
  Table t;
  t.columns = {"name", "interaction", "rabi_mhz", "coefficient", "wavelength_nm", "r_c_um", "B0_mT", "kappa",
               "recoil_uK", "lifetime_us", "description"};
  for (size_t i = 0; i < rg_preset_count(); ++i) {
    rg_preset_info p;
    ok(rg_preset_at(i, &p));
    rg_system* raw = nullptr;
    ok(rg_system_create(&p.params, &raw));
    SystemPtr s(raw);
    rg_units u;
    ok(rg_system_units(s.get(), &u));
    const bool rdd = p.params.kind == RG_RDD;
    const double coef = p.params.coefficient / (rdd ? rg_c3_from_mhz_um3(1.0) : rg_c6_from_ghz_um6(1.0));
    t.rows.push_back({std::string(p.name), std::string(rdd ? "rdd" : "vdw"),
                      p.params.rabi_magnitude / rg_mhz_to_angular(1.0), coef,
                      2.0 * M_PI / p.params.wavenumber * 1e9, u.length * 1e6, u.field * 1e3, u.kappa,
                      u.scalar_potential / rg_boltzmann() * 1e6, p.lifetime * 1e6, std::string(p.description)});
  }
  t.metadata["command"] = "presets";
  t.metadata["version"] = rg_version();
  t.metadata["coefficient_units"] = "MHz um^3 (rdd), GHz um^6 (vdw), over 2pi";
  emit(t, config.format, config.output);
  return exit_ok;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Artificial gauge fields for a driven Rydberg atom pair", "rg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rg_version());

  struct Sub {
    const char* name;
    const char* help;
    int (*fn)(const RunConfig&);
    bool needs_system;
  };
  const std::vector<Sub> subs{
      {"scan", "gauge potentials and fields along the pair axis", cmd_scan, true},
      {"map", "field samples on a plane containing k_L", cmd_map, true},
      {"peaks", "extrema of B_phi per state", cmd_peaks, true},
      {"scaling", "power-law fit of the B_phi extrema over detuning", cmd_scaling, true},
      {"trajectory", "semiclassical trajectory of the moving atom", cmd_trajectory, true},
      {"validate", "oracle and invariant suite", cmd_validate, false},
      {"presets", "built-in experimental parameter sets", cmd_presets, false},
  };
  std::vector<FlagSet> flags(subs.size());
  std::vector<CLI::App*> apps;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    CLI::App* sub = app.add_subcommand(subs[i].name, subs[i].help);
    flags[i].attach(*sub);
    apps.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!apps[i]->parsed()) continue;
    RunConfig config;
    try {
      config = flags[i].resolve(*apps[i], subs[i].needs_system);
    } catch (const ConfigError& e) {
      std::cerr << "rg " << subs[i].name << ": " << e.what() << '\n';
      return exit_usage;
    }
    try {
      return subs[i].fn(config);
    } catch (const ConfigError& e) {
      std::cerr << "rg " << subs[i].name << ": " << e.what() << '\n';
      return exit_usage;
    } catch (const std::exception& e) {
      std::cerr << "rg " << subs[i].name << ": " << e.what() << '\n';
      return exit_failure;
    }
  }
  return exit_usage;
}

}  // namespace rg
