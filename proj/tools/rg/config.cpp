#include "rg/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rg {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

const KeyInfo* find_key(const std::string& key) {
  for (const auto& k : config_keys())
    if (k.key == key) return &k;
  return nullptr;
}

[[noreturn]] void bad(const Entry& e, const std::string& what) {
  throw ConfigError(e.origin + ": " + what + " for key '" + e.key + "'");
}

// Number with an optional trailing unit that must match the key's unit.
double number(const Entry& e) {
  const std::string v = trim(e.value);
  double out = 0.0;
  const char* first = v.data();
  const char* last = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr == first) bad(e, "malformed number '" + v + "'");
  const std::string unit = trim(std::string(ptr, last));
  if (!unit.empty()) {
    const KeyInfo* info = find_key(e.key);
    if (!info || lower(unit) != lower(info->unit))
      bad(e, "unit mismatch: expected " + (info && !info->unit.empty() ? info->unit : "no unit") + ", got '" + unit +
                 "'");
  }
  if (!std::isfinite(out)) bad(e, "non-finite number");
  return out;
}

std::size_t count(const Entry& e) {
  const double v = number(e);
  if (v < 1.0 || v != std::floor(v) || v > 1e8) bad(e, "expected a positive integer, got '" + e.value + "'");
  return static_cast<std::size_t>(v);
}

bool boolean(const Entry& e) {
  const std::string v = lower(trim(e.value));
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad(e, "expected a boolean, got '" + e.value + "'");
}

std::string choice(const Entry& e, std::initializer_list<const char*> allowed) {
  const std::string v = lower(trim(e.value));
  for (const char* a : allowed)
    if (v == a) return v;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  bad(e, "expected one of " + list + ", got '" + e.value + "'");
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void apply(RunConfig& c, const Entry& e) {
  const std::string& k = e.key;
  if (!find_key(k)) throw ConfigError(e.origin + ": unknown key '" + k + "'");
  if (k == "preset") c.preset = trim(e.value);
  else if (k == "interaction") c.interaction = choice(e, {"rdd", "vdw"});
  else if (k == "rabi_mhz") c.rabi_mhz = number(e);
  else if (k == "rabi_phase") c.rabi_phase = number(e);
  else if (k == "detuning_ratio") c.detuning_ratio = number(e);
  else if (k == "c3_mhz_um3") c.c3_mhz_um3 = number(e);
  else if (k == "c6_ghz_um6") c.c6_ghz_um6 = number(e);
  else if (k == "wavelength_nm") c.wavelength_nm = number(e);
  else if (k == "mass_u") c.mass_u = number(e);
  else if (k == "mass_b_u") c.mass_b_u = number(e);
  else if (k == "labels") {
    c.labels.clear();
    for (const auto& item : split(e.value)) {
      rg_label l;
      if (rg_parse_label(item.c_str(), &l) != RG_OK) bad(e, "unknown state label '" + item + "'");
      c.labels.push_back(l);
    }
    if (c.labels.empty()) bad(e, "empty label list");
    c.labels_given = true;
  } else if (k == "rmin") c.rmin = number(e);
  else if (k == "rmax") c.rmax = number(e);
  else if (k == "points") c.points = count(e);
  else if (k == "grid") c.grid = choice(e, {"log", "linear"});
  else if (k == "xmin") c.xmin = number(e);
  else if (k == "xmax") c.xmax = number(e);
  else if (k == "zmin") c.zmin = number(e);
  else if (k == "zmax") c.zmax = number(e);
  else if (k == "nx") c.nx = count(e);
  else if (k == "nz") c.nz = count(e);
  else if (k == "extremum") c.extremum = choice(e, {"max", "min", "both"});
  else if (k == "detunings") {
    c.detunings.clear();
    for (const auto& item : split(e.value)) c.detunings.push_back(number(Entry{k, item, e.origin}));
    if (c.detunings.size() < 2) bad(e, "need at least two detunings");
  } else if (k == "speed") c.speed = number(e);
  else if (k == "impact_parameter_rc") c.impact_parameter_rc = number(e);
  else if (k == "path_length_rc") c.path_length_rc = number(e);
  else if (k == "time_step_ns") c.time_step_ns = number(e);
  else if (k == "max_time_us") c.max_time_us = number(e);
  else if (k == "output_stride") c.output_stride = count(e);
  else if (k == "lorentz") c.lorentz = boolean(e);
  else if (k == "adiabatic_force") c.adiabatic_force = boolean(e);
  else if (k == "scalar_gradient") c.scalar_gradient = boolean(e);
  else if (k == "format") c.format = choice(e, {"csv", "json"});
  else if (k == "output") c.output = trim(e.value);
  else if (k == "si") c.si = boolean(e);
  else if (k == "quick") c.quick = boolean(e);
}

void check(const RunConfig& c, bool require_system) {
  if (require_system && c.preset.empty() && !(c.rabi_mhz && c.interaction && (c.c3_mhz_um3 || c.c6_ghz_um6)))
    throw ConfigError("either preset or rabi_mhz, interaction and c3_mhz_um3/c6_ghz_um6 must be given");
  if (c.interaction == "vdw" && c.c3_mhz_um3) throw ConfigError("c3 invalid for vdw");
  if (c.interaction == "rdd" && c.c6_ghz_um6) throw ConfigError("c6 invalid for rdd");
  if (c.c3_mhz_um3 && c.c6_ghz_um6) throw ConfigError("c3_mhz_um3 and c6_ghz_um6 are mutually exclusive");
  if (c.rabi_mhz && !(*c.rabi_mhz > 0.0)) throw ConfigError("rabi_mhz must be positive");
  if (c.c3_mhz_um3 && *c.c3_mhz_um3 == 0.0) throw ConfigError("c3_mhz_um3 must be nonzero");
  if (c.c6_ghz_um6 && *c.c6_ghz_um6 == 0.0) throw ConfigError("c6_ghz_um6 must be nonzero");
  if (c.wavelength_nm && !(*c.wavelength_nm > 0.0)) throw ConfigError("wavelength_nm must be positive");
  if (c.mass_u && !(*c.mass_u > 0.0)) throw ConfigError("mass_u must be positive");
  if (c.mass_b_u && !(*c.mass_b_u > 0.0)) throw ConfigError("mass_b_u must be positive");
  if (!(c.rmin > 0.0 && c.rmax > c.rmin)) throw ConfigError("need 0 < rmin < rmax");
  if (!(c.xmax > c.xmin && c.zmax > c.zmin)) throw ConfigError("need xmin < xmax and zmin < zmax");
  if (!(c.speed > 0.0)) throw ConfigError("speed must be positive");
  if (!(c.path_length_rc > 0.0)) throw ConfigError("path_length_rc must be positive");
  if (c.time_step_ns && !(*c.time_step_ns > 0.0)) throw ConfigError("time_step_ns must be positive");
  if (c.max_time_us && !(*c.max_time_us > 0.0)) throw ConfigError("max_time_us must be positive");
}

}  // namespace

const std::vector<KeyInfo>& config_keys() {
  static const std::vector<KeyInfo> keys{
      {"preset", "", "built-in parameter set (see 'rg presets')"},
      {"interaction", "", "rdd or vdw"},
      {"rabi_mhz", "MHz", "|Omega|/2pi"},
      {"rabi_phase", "rad", "phase of Omega"},
      {"detuning_ratio", "", "delta/|Omega|"},
      {"c3_mhz_um3", "MHz*um^3", "C3/2pi, signed"},
      {"c6_ghz_um6", "GHz*um^6", "C6/2pi, signed"},
      {"wavelength_nm", "nm", "excitation wavelength"},
      {"mass_u", "u", "atomic mass (both atoms unless mass_b_u is set)"},
      {"mass_b_u", "u", "mass of atom b"},
      {"labels", "", "comma-separated subset of 1,+,-"},
      {"rmin", "", "scan start, r/r_c"},
      {"rmax", "", "scan end, r/r_c"},
      {"points", "", "scan points"},
      {"grid", "", "log or linear"},
      {"xmin", "", "map x start, r_c"},
      {"xmax", "", "map x end, r_c"},
      {"zmin", "", "map z start, r_c"},
      {"zmax", "", "map z end, r_c"},
      {"nx", "", "map points along x"},
      {"nz", "", "map points along z"},
      {"extremum", "", "max, min or both"},
      {"detunings", "", "comma-separated delta/|Omega| values for scaling"},
      {"speed", "m/s", "initial speed"},
      {"impact_parameter_rc", "", "impact parameter, r_c"},
      {"path_length_rc", "", "transverse path length, r_c"},
      {"time_step_ns", "ns", "RK4 step"},
      {"max_time_us", "us", "time limit"},
      {"output_stride", "", "record every n-th step"},
      {"lorentz", "", "Lorentz force on/off"},
      {"adiabatic_force", "", "-grad E of the followed state on/off"},
      {"scalar_gradient", "", "-grad phi on/off"},
      {"format", "", "csv or json"},
      {"output", "", "output path, stdout when empty"},
      {"si", "", "SI columns instead of natural units"},
      {"quick", "", "validate: skip the slow checks"},
  };
  return keys;
}

std::vector<Entry> parse_config_text(const std::string& text, const std::string& source) {
  std::vector<Entry> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string origin = source + ":" + std::to_string(number);
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(origin + ": expected 'key = value'");
    Entry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), origin};
    if (e.key.empty()) throw ConfigError(origin + ": missing key");
    if (!find_key(e.key)) throw ConfigError(origin + ": unknown key '" + e.key + "'");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Entry> read_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

RunConfig build_config(const std::vector<Entry>& entries, bool require_system) {
  RunConfig c;
  for (const Entry& e : entries) apply(c, e);
  check(c, require_system);
  return c;
}

SystemPtr make_system(const RunConfig& c) {
  rg_params p{};
  if (!c.preset.empty()) {
    rg_system* base = nullptr;
    if (rg_system_from_preset(c.preset.c_str(), &base) != RG_OK) throw ConfigError(rg_last_error());
    rg_system_params(base, &p);
    rg_system_destroy(base);
  } else {
    p.k_dir[2] = 1.0;
    p.wavenumber = 2.0 * M_PI / 296e-9;
    p.mass_a = p.mass_b = 87.0 * rg_atomic_mass_unit();
  }
  const bool vdw = c.interaction ? *c.interaction == "vdw" : (c.c6_ghz_um6 ? true : p.kind == RG_VDW);
  if (c.interaction && (p.kind == RG_VDW) != vdw && !c.c3_mhz_um3 && !c.c6_ghz_um6)
    throw ConfigError(std::string(vdw ? "c6_ghz_um6" : "c3_mhz_um3") + " required when switching interaction to " +
                      (vdw ? "vdw" : "rdd"));
  if (!vdw && c.c6_ghz_um6) throw ConfigError("c6 invalid for rdd");
  if (vdw && c.c3_mhz_um3) throw ConfigError("c3 invalid for vdw");
  p.kind = vdw ? RG_VDW : RG_RDD;
  if (c.c3_mhz_um3) p.coefficient = rg_c3_from_mhz_um3(*c.c3_mhz_um3);
  if (c.c6_ghz_um6) p.coefficient = rg_c6_from_ghz_um6(*c.c6_ghz_um6);

  const double ratio = p.rabi_magnitude > 0.0 ? p.detuning / p.rabi_magnitude : 0.0;
  if (c.rabi_mhz) p.rabi_magnitude = rg_mhz_to_angular(*c.rabi_mhz);
  p.detuning = c.detuning_ratio.value_or(ratio) * p.rabi_magnitude;
  if (c.rabi_phase) p.rabi_phase = *c.rabi_phase;
  if (c.wavelength_nm) p.wavenumber = 2.0 * M_PI / (*c.wavelength_nm * 1e-9);
  if (c.mass_u) p.mass_a = p.mass_b = *c.mass_u * rg_atomic_mass_unit();
  if (c.mass_b_u) p.mass_b = *c.mass_b_u * rg_atomic_mass_unit();

  rg_system* s = nullptr;
  if (rg_system_create(&p, &s) != RG_OK) throw ConfigError(rg_last_error());
  return SystemPtr(s);
}

}  // namespace rg
