#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "rg/config.hpp"
#include "rg/output.hpp"

#ifndef RG_BINARY
#error "RG_BINARY must point at the rg executable"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run_rg(const std::string& args) {
  static int counter = 0;
  const std::string base = "cli_test_" + std::to_string(counter++);
  const std::string cmd = std::string(RG_BINARY) + " " + args + " > " + base + ".out 2> " + base + ".err";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  std::remove((base + ".out").c_str());
  std::remove((base + ".err").c_str());
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::ofstream(name, std::ios::binary) << text;
  return name;
}

}  // namespace

TEST_CASE("config text parsing") {
  const auto e = rg::parse_config_text("# comment\npreset = gaetan2009  # trailing\n\ndetuning_ratio=-2\n", "cfg");
  REQUIRE(e.size() == 2);
  CHECK(e[0].key == "preset");
  CHECK(e[0].value == "gaetan2009");
  CHECK(e[1].origin == "cfg:4");
  CHECK_THROWS_WITH_AS(rg::parse_config_text("bogus = 1\n", "cfg"), "cfg:1: unknown key 'bogus'", rg::ConfigError);
  CHECK_THROWS_AS(rg::parse_config_text("preset\n", "cfg"), rg::ConfigError);
}

TEST_CASE("preset alone gives a complete config") {
  const rg::RunConfig c = rg::build_config(rg::parse_config_text("preset = gaetan2009\n", "cfg"));
  CHECK(c.points == 400);
  CHECK(c.format == "csv");
  rg::SystemPtr s = rg::make_system(c);
  rg_units u;
  rg_system_units(s.get(), &u);
  CHECK(u.detuning_ratio == 0.0);
}

TEST_CASE("later entries override earlier ones") {
  auto e = rg::parse_config_text("preset = gaetan2009\ndetuning_ratio = 1\n", "cfg");
  e.push_back({"detuning_ratio", "-2", "--detuning-ratio"});
  const rg::RunConfig c = rg::build_config(e);
  REQUIRE(c.detuning_ratio);
  CHECK(*c.detuning_ratio == -2.0);
}

TEST_CASE("validation errors name the key") {
  auto build = [](const std::string& text) { return rg::build_config(rg::parse_config_text(text, "cfg")); };
  CHECK_THROWS_WITH_AS(build("preset = beguin2013\ninteraction = vdw\nc3_mhz_um3 = 100\n"), "c3 invalid for vdw",
                       rg::ConfigError);
  CHECK_THROWS_WITH_AS(build("preset = gaetan2009\npoints = 1.5\n"),
                       doctest::Contains("'points'"), rg::ConfigError);
  CHECK_THROWS_WITH_AS(build("preset = gaetan2009\nrabi_mhz = abc\n"), doctest::Contains("malformed number"),
                       rg::ConfigError);
  CHECK_THROWS_WITH_AS(build("preset = gaetan2009\nrabi_mhz = 6 kHz\n"), doctest::Contains("unit mismatch"),
                       rg::ConfigError);
  CHECK_NOTHROW(build("preset = gaetan2009\nrabi_mhz = 6 MHz\n"));
  CHECK_THROWS_AS(build("rabi_mhz = 1\n"), rg::ConfigError);
}

TEST_CASE("numbers print with full precision") {
  CHECK(rg::format_number(0.1) == "0.10000000000000001");
  CHECK(std::stod(rg::format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("scan writes the documented CSV schema") {
  const Run r = run_rg("scan --preset gaetan2009 --detuning-ratio 0 --rmin 0.1 --rmax 5 --points 400");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string header, line;
  std::getline(in, header);
  CHECK(header == "r_over_rc,A1,Aplus,Aminus,Bphi1,Bphiplus,Bphiminus,phi1,phiplus,phiminus");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 400);
}

TEST_CASE("negative flag values and SI columns") {
  const Run r = run_rg("scan --preset gaetan2009 --detuning-ratio -2 --points 3 --si");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("r_m,A1_kg_m_s", 0) == 0);
}

TEST_CASE("CSV and JSON carry identical values") {
  const Run csv = run_rg("scan --preset beguin2013 --points 7");
  const Run json = run_rg("scan --preset beguin2013 --points 7 --format json");
  REQUIRE(csv.code == 0);
  REQUIRE(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["metadata"]["command"] == "scan");
  std::istringstream in(csv.out);
  std::string line;
  std::getline(in, line);
  for (const auto& row : doc["rows"]) {
    std::getline(in, line);
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');
    CHECK(std::stod(cell) == row["r_over_rc"].get<double>());
    std::getline(cells, cell, ',');
    CHECK(std::stod(cell) == row["A1"].get<double>());
  }
}

TEST_CASE("config file and flag precedence end to end") {
  const std::string path = write_temp("cli_test.cfg", "preset = gaetan2009\npoints = 5\ndetuning_ratio = 1\n");
  const Run r = run_rg("scan --config " + path + " --points 3 --format json");
  std::remove(path.c_str());
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"].size() == 3);
  CHECK(doc["metadata"]["detuning_ratio"] == 1.0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_rg("").code == 2);
  CHECK(run_rg("frobnicate").code == 2);
  CHECK(run_rg("scan").code == 2);
  const Run bad = run_rg("scan --preset beguin2013 --interaction vdw --c3-mhz-um3 5");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("c3 invalid for vdw") != std::string::npos);
  CHECK(run_rg("scan --preset gaetan2009 --unknown-flag 1").code == 2);
}

TEST_CASE("presets, peaks and map run") {
  const Run p = run_rg("presets");
  REQUIRE(p.code == 0);
  CHECK(p.out.find("gaetan2009") != std::string::npos);
  const Run k = run_rg("peaks --preset gaetan2009 --labels + --extremum max");
  REQUIRE(k.code == 0);
  CHECK(k.out.find("+,max,0,1,") != std::string::npos);
  const Run m = run_rg("map --preset gaetan2009 --nx 3 --nz 2 --labels 1");
  REQUIRE(m.code == 0);
  int lines = 0;
  for (char c : m.out) lines += c == '\n';
  CHECK(lines == 1 + 6);
}

TEST_CASE("trajectory reports the deflection last") {
  const Run r = run_rg("trajectory --preset gaetan2009 --speed 0.10 --impact-parameter-rc 1.0");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("t_s,x_m,y_m,z_m,vx,vy,vz,adiabaticity\n", 0) == 0);
  const auto last = r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1);
  CHECK(last.rfind("# z_deflection_um ", 0) == 0);
}

TEST_CASE("quick validation summary") {
  const Run r = run_rg("validate --quick");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("oracles: ") != std::string::npos);
  CHECK(r.out.find(" passed, 0 failed\n") != std::string::npos);
}
