#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "rydgauge/rydgauge.h"

namespace {

struct System {
  rg_system* ptr = nullptr;
  ~System() { rg_system_destroy(ptr); }
};

}  // namespace

TEST_CASE("preset handle and units") {
  System s;
  REQUIRE(rg_system_from_preset("gaetan2009", &s.ptr) == RG_OK);
  rg_units u;
  REQUIRE(rg_system_units(s.ptr, &u) == RG_OK);
  CHECK(u.length * 1e6 == doctest::Approx(7.896).epsilon(1e-3));
  CHECK(u.sign == -1);
  CHECK(u.kappa == doctest::Approx(167.6).epsilon(1e-3));

  REQUIRE(rg_system_set_detuning_ratio(s.ptr, -2.0) == RG_OK);
  rg_units v;
  rg_system_units(s.ptr, &v);
  CHECK(v.detuning_ratio == doctest::Approx(-2.0));
  CHECK(v.length == doctest::Approx(u.length * std::pow(5.0, -1.0 / 12.0)));  // r_c scales as Lambda^(-1/6)
}

TEST_CASE("errors carry a status and a message") {
  System s;
  CHECK(rg_system_from_preset("missing", &s.ptr) == RG_NOT_FOUND);
  CHECK(s.ptr == nullptr);
  CHECK(std::string(rg_last_error()).find("missing") != std::string::npos);

  rg_params p{};
  CHECK(rg_system_create(&p, &s.ptr) == RG_INVALID_ARGUMENT);
  CHECK(std::strlen(rg_last_error()) > 0);
  CHECK(rg_system_create(nullptr, &s.ptr) == RG_INVALID_ARGUMENT);
  CHECK(std::string(rg_status_string(RG_DOMAIN_ERROR)) == "domain error");

  rg_label l;
  CHECK(rg_parse_label("+", &l) == RG_OK);
  CHECK(l == RG_LABEL_PLUS);
  CHECK(rg_parse_label("x", &l) == RG_INVALID_ARGUMENT);
}

TEST_CASE("explicit parameters round trip") {
  rg_params p{};
  p.rabi_magnitude = rg_mhz_to_angular(2.0);
  p.detuning = 0.5 * p.rabi_magnitude;
  p.wavenumber = 2.0 * M_PI / 296e-9;
  p.k_dir[2] = 2.0;  // normalized on the way in
  p.mass_a = p.mass_b = 87.0 * rg_atomic_mass_unit();
  p.kind = RG_VDW;
  p.coefficient = rg_c6_from_ghz_um6(-500.0);
  System s;
  REQUIRE(rg_system_create(&p, &s.ptr) == RG_OK);
  rg_params back;
  rg_system_params(s.ptr, &back);
  CHECK(back.k_dir[2] == doctest::Approx(1.0));
  CHECK(back.kind == RG_VDW);
  CHECK(back.coefficient == p.coefficient);
}

TEST_CASE("gauge samples, scan and map agree") {
  System s;
  REQUIRE(rg_system_from_preset("beguin2013", &s.ptr) == RG_OK);
  std::vector<double> grid(20);
  REQUIRE(rg_log_grid(0.2, 4.0, grid.size(), grid.data()) == RG_OK);
  std::vector<rg_scan_row> rows(grid.size());
  size_t written = 0, flagged = 0;
  REQUIRE(rg_scan(s.ptr, grid.data(), grid.size(), rows.data(), &written, &flagged) == RG_OK);
  CHECK(written + flagged == grid.size());
  rg_gauge g;
  REQUIRE(rg_gauge_at(s.ptr, RG_LABEL_MINUS, rows[3].rho, &g) == RG_OK);
  CHECK(g.A == rows[3].A[2]);
  CHECK(g.b_phi == rows[3].b_phi[2]);
  CHECK(rg_gauge_at(s.ptr, RG_LABEL_MINUS, -1.0, &g) == RG_INVALID_ARGUMENT);

  const double xs[2] = {0.5, 1.0}, zs[1] = {0.0};
  rg_map_sample m[2];
  REQUIRE(rg_field_map(s.ptr, RG_LABEL_PLUS, xs, 2, zs, 1, m) == RG_OK);
  CHECK(m[1].x == 1.0);
  CHECK(m[1].rho == doctest::Approx(1.0));
  double b[3];
  const double r[3] = {1.0, 0.0, 0.0};
  REQUIRE(rg_magnetic_field(s.ptr, RG_LABEL_PLUS, r, 0, b) == RG_OK);
  for (int k = 0; k < 3; ++k) CHECK(b[k] == doctest::Approx(m[1].B[k]));
}

TEST_CASE("peaks and scaling through the C interface") {
  System s;
  REQUIRE(rg_system_from_preset("gaetan2009", &s.ptr) == RG_OK);
  rg_peak_options o;
  rg_peak_options_default(&o);
  CHECK(o.points == 400);
  rg_peak p;
  REQUIRE(rg_find_peak(s.ptr, RG_LABEL_PLUS, RG_EXTREMUM_MAX, &o, &p) == RG_OK);
  CHECK(p.found);
  CHECK(p.b_peak > 0.0);
  const double ds[3] = {-10.0, -20.0, -40.0};
  rg_scaling fit;
  rg_peak peaks[3];
  REQUIRE(rg_scaling_fit(s.ptr, RG_LABEL_PLUS, RG_EXTREMUM_MAX, ds, 3, &o, &fit, peaks) == RG_OK);
  CHECK(fit.exponent == doctest::Approx(2.0).epsilon(0.01));
  CHECK(peaks[2].detuning_ratio == -40.0);
}

TEST_CASE("regime helpers") {
  System s;
  REQUIRE(rg_system_from_preset("gaetan2009", &s.ptr) == RG_OK);
  rg_blockade b;
  REQUIRE(rg_blockade_gauge(s.ptr, 0.05, 1, &b) == RG_OK);
  CHECK(b.valid);
  CHECK(rg_blockade_gauge(s.ptr, 0.05, 0, &b) == RG_INVALID_ARGUMENT);
  rg_antiblockade a;
  REQUIRE(rg_antiblockade_distances(s.ptr, &a) == RG_OK);
  CHECK_FALSE(a.has_single_photon);  // delta = 0
  double w;
  REQUIRE(rg_weak_expansion(0.0, RG_LABEL_MINUS, 0.0, &w) == RG_OK);
  CHECK(w == doctest::Approx(-0.5));
  double e[4];
  REQUIRE(rg_eigenvalues(0.0, 0.0, e) == RG_OK);
  CHECK(e[1] == doctest::Approx(1.0));
  double R, r;
  REQUIRE(rg_com_scalar_potentials(s.ptr, RG_LABEL_PLUS, 1.0, &R, &r) == RG_OK);
  CHECK(R >= 0.0);
  CHECK(r >= 0.0);
}

TEST_CASE("trajectory handle") {
  System s;
  REQUIRE(rg_system_from_preset("gaetan2009", &s.ptr) == RG_OK);
  rg_trajectory_config c;
  REQUIRE(rg_paper_scenario(s.ptr, 0.1, 1.0, 2.0, &c) == RG_OK);
  CHECK(c.label == RG_LABEL_PLUS);
  rg_trajectory* t = nullptr;
  REQUIRE(rg_integrate(s.ptr, &c, &t) == RG_OK);
  rg_trajectory_summary sum;
  REQUIRE(rg_trajectory_summary_get(t, &sum) == RG_OK);
  CHECK_FALSE(sum.aborted);
  CHECK(sum.states > 10);
  rg_trajectory_state st;
  CHECK(rg_trajectory_state_at(t, sum.states - 1, &st) == RG_OK);
  CHECK(rg_trajectory_state_at(t, sum.states, &st) == RG_NOT_FOUND);
  CHECK(std::string(rg_trajectory_reason(t)).empty());
  rg_trajectory_destroy(t);

  rg_trajectory_config d;
  REQUIRE(rg_trajectory_defaults(&d) == RG_OK);
  CHECK(d.time_step == doctest::Approx(50e-9));
  CHECK(d.lorentz == 1);
}

TEST_CASE("presets are enumerable") {
  REQUIRE(rg_preset_count() == 2);
  rg_preset_info p;
  REQUIRE(rg_preset_at(1, &p) == RG_OK);
  CHECK(std::string(p.name) == "beguin2013");
  CHECK(rg_preset_at(2, &p) == RG_NOT_FOUND);
}

TEST_CASE("quick validation through the callback") {
  struct Tally {
    int calls = 0;
  } tally;
  int passed = 0, failed = 0;
  auto cb = [](const rg_check* c, void* user) {
    static_cast<Tally*>(user)->calls++;
    CHECK(c->name != nullptr);
  };
  REQUIRE(rg_validate(1, cb, &tally, &passed, &failed) == RG_OK);
  CHECK(failed == 0);
  CHECK(tally.calls == passed + failed);
}
