#ifndef RYDGAUGE_H
#define RYDGAUGE_H

/* C interface to the rydgauge library: artificial gauge potentials for a
 * laser-driven pair of interacting Rydberg atoms.
 *
 * Every fallible call returns rg_status; on failure rg_last_error() holds a
 * message for the calling thread until its next failing call. Handles are
 * opaque and owned by the caller. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(RG_BUILDING_LIBRARY)
#    define RG_API __declspec(dllexport)
#  else
#    define RG_API __declspec(dllimport)
#  endif
#else
#  define RG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  RG_OK = 0,
  RG_INVALID_ARGUMENT = 1,
  RG_DOMAIN_ERROR = 2, /* outside the model's validity, e.g. Delta = 0 in blockade */
  RG_NOT_FOUND = 3,
  RG_INTERNAL = 4
} rg_status;

typedef enum { RG_RDD = 0, RG_VDW = 1 } rg_interaction;

/* Eigenstate labels 1, +, - (columns ordered this way everywhere). */
typedef enum { RG_LABEL_ONE = 0, RG_LABEL_PLUS = 1, RG_LABEL_MINUS = 2 } rg_label;

typedef enum { RG_EXTREMUM_MAX = 0, RG_EXTREMUM_MIN = 1 } rg_extremum;

RG_API const char* rg_version(void);
RG_API const char* rg_status_string(rg_status status);
RG_API const char* rg_last_error(void);

RG_API const char* rg_label_name(rg_label label);
RG_API rg_status rg_parse_label(const char* text, rg_label* out);

/* SI inputs. Angular frequencies in rad/s, coefficient in rad s^-1 m^3 (RDD)
 * or m^6 (vdW) with its sign, wavenumber in 1/m, masses in kg. */
typedef struct {
  double rabi_magnitude;
  double rabi_phase;
  double detuning;
  double wavenumber;
  double k_dir[3];
  double mass_a;
  double mass_b;
  rg_interaction kind;
  double coefficient;
} rg_params;

/* Natural scales of a system plus its reduced parameters. */
typedef struct {
  double frequency;        /* |Omega|, rad/s */
  double energy;           /* hbar |Omega|, J */
  double length;           /* r_c, m */
  double vector_potential; /* hbar k_L, kg m/s */
  double field;            /* B0 = hbar k_L / (e r_c), T */
  double scalar_potential; /* hbar^2 k_L^2 / 2 m_a, J */
  double time;             /* 1/|Omega|, s */
  double kappa;            /* k_L r_c */
  double detuning_ratio;   /* delta/|Omega| */
  int sign;                /* sign of C3 or C6 */
} rg_units;

typedef struct rg_system rg_system;

RG_API rg_status rg_system_create(const rg_params* params, rg_system** out);
RG_API rg_status rg_system_from_preset(const char* name, rg_system** out);
RG_API rg_status rg_system_clone(const rg_system* system, rg_system** out);
RG_API void rg_system_destroy(rg_system* system);
RG_API rg_status rg_system_params(const rg_system* system, rg_params* out);
RG_API rg_status rg_system_units(const rg_system* system, rg_units* out);
/* Replaces delta with ratio * |Omega|; r_c and every derived scale follow. */
RG_API rg_status rg_system_set_detuning_ratio(rg_system* system, double ratio);

typedef struct {
  const char* name;
  const char* description;
  rg_params params;
  double lifetime;             /* s */
  double temperature;          /* K */
  double beam_waist;           /* m */
  double rabi_range[2];        /* rad/s */
  double coefficient_range[2]; /* |C|, SI */
} rg_preset_info;

RG_API size_t rg_preset_count(void);
RG_API rg_status rg_preset_at(size_t index, rg_preset_info* out);

/* Unit helpers for human-facing inputs (frequencies given as f = omega / 2pi). */
RG_API double rg_mhz_to_angular(double mhz);
RG_API double rg_c3_from_mhz_um3(double value);
RG_API double rg_c6_from_ghz_um6(double value);
RG_API double rg_atomic_mass_unit(void);
RG_API double rg_boltzmann(void);

/* Pair spectrum in units of |Omega| for a shift V/|Omega|: {E0, E1, E+, E-}. */
RG_API rg_status rg_eigenvalues(double detuning_ratio, double shift, double out[4]);

/* Gauge quantities at separation rho = r / r_c, dimensionless:
 * A along k_L in hbar k_L, B_phi in B0, phi in hbar^2 k_L^2 / 2 m_a. */
typedef struct {
  double A;
  double b_phi;
  double phi;
  int flagged; /* near-degenerate: values unreliable */
} rg_gauge;

RG_API rg_status rg_gauge_at(const rg_system* system, rg_label label, double rho, rg_gauge* out);
/* Field on atom a (atom = 0) or b (atom = 1) for a relative vector r_a - r_b in r_c. */
RG_API rg_status rg_magnetic_field(const rg_system* system, rg_label label, const double r_vec[3], int atom,
                                   double out[3]);

typedef struct {
  double rho;
  double A[3];
  double b_phi[3];
  double phi[3];
} rg_scan_row;

RG_API rg_status rg_log_grid(double lo, double hi, size_t points, double* out);
RG_API rg_status rg_linear_grid(double lo, double hi, size_t points, double* out);
/* rows must hold n entries; flagged samples are skipped, *written counts the rest. */
RG_API rg_status rg_scan(const rg_system* system, const double* grid, size_t n, rg_scan_row* rows,
                         size_t* written, size_t* flagged);

/* Samples in the plane spanned by k_L and a fixed transverse axis; atom b at the origin. */
typedef struct {
  double x, z;  /* r_c */
  double rho;
  double A[3];
  double phi;
  double B[3];
  int flagged;
} rg_map_sample;

/* out must hold nx * nz samples, z-major. */
RG_API rg_status rg_field_map(const rg_system* system, rg_label label, const double* xs, size_t nx, const double* zs,
                              size_t nz, rg_map_sample* out);

typedef struct {
  double rmin;
  double rmax;
  size_t points;
  double step_threshold;
  double tolerance;
} rg_peak_options;

typedef struct {
  rg_label label;
  rg_extremum kind;
  double detuning_ratio;
  int found;
  double r_peak;
  double b_peak;
  size_t samples;
  char diagnostics[256];
} rg_peak;

RG_API void rg_peak_options_default(rg_peak_options* out);
RG_API rg_status rg_find_peak(const rg_system* system, rg_label label, rg_extremum kind,
                              const rg_peak_options* options, rg_peak* out);

typedef struct {
  double exponent;
  double prefactor; /* beta in |B_peak| = beta |delta|^exponent */
  double gamma;     /* r_peak / r_c as |delta| -> infinity */
  double residual;
  int low_confidence;
} rg_scaling;

/* peaks may be NULL, otherwise it receives one entry per detuning. */
RG_API rg_status rg_scaling_fit(const rg_system* system, rg_label label, rg_extremum kind, const double* detunings,
                                size_t n, const rg_peak_options* options, rg_scaling* out, rg_peak* peaks);

typedef struct {
  int has_single_photon;
  double single_photon; /* r_c */
  int has_two_photon;
  double two_photon;
  char reason[128];
} rg_antiblockade;

RG_API rg_status rg_antiblockade_distances(const rg_system* system, rg_antiblockade* out);

typedef struct {
  double A;
  double phi;
  int valid;
} rg_blockade;

/* branch = +1 or -1 for the two effective states. */
RG_API rg_status rg_blockade_gauge(const rg_system* system, double rho, int branch, rg_blockade* out);
RG_API rg_status rg_weak_expansion(double detuning_ratio, rg_label label, double shift, double* out);

/* Centre-of-mass and relative scalar potentials, phi_R in hbar^2 k^2 / 2M, phi_r in hbar^2 k^2 / 2 mu. */
RG_API rg_status rg_com_scalar_potentials(const rg_system* system, rg_label label, double rho, double* phi_R,
                                          double* phi_r);

typedef struct {
  rg_label label;
  double position[3]; /* m, moving atom a */
  double velocity[3]; /* m/s */
  double pinned[3];   /* m, atom b */
  double charge;      /* C */
  double time_step;
  double max_time;
  double max_path_length; /* transverse arc length, 0 disables */
  int lorentz;
  int adiabatic_potential;
  int scalar_gradient;
  double background; /* J */
  size_t output_stride;
} rg_trajectory_config;

typedef struct {
  double t;
  double position[3];
  double velocity[3];
  double energy_label; /* J */
  double adiabaticity;
  int adiabaticity_infinite;
} rg_trajectory_state;

typedef struct {
  int aborted;
  size_t steps;
  size_t states;
  double path_length;
  double traversal_time;
} rg_trajectory_summary;

typedef struct rg_trajectory rg_trajectory;

RG_API rg_status rg_trajectory_defaults(rg_trajectory_config* out);
/* Moving atom starts at (-L/2, b, 0) relative to the pinned one with v along x. */
RG_API rg_status rg_paper_scenario(const rg_system* system, double speed, double impact_parameter_rc,
                                   double path_length_rc, rg_trajectory_config* out);
RG_API rg_status rg_integrate(const rg_system* system, const rg_trajectory_config* config, rg_trajectory** out);
RG_API void rg_trajectory_destroy(rg_trajectory* trajectory);
RG_API rg_status rg_trajectory_summary_get(const rg_trajectory* trajectory, rg_trajectory_summary* out);
RG_API rg_status rg_trajectory_state_at(const rg_trajectory* trajectory, size_t index, rg_trajectory_state* out);
/* Empty unless aborted; valid while the handle lives. */
RG_API const char* rg_trajectory_reason(const rg_trajectory* trajectory);

typedef struct {
  const char* name;
  int passed;
  double value;
  double tolerance;
  const char* detail;
} rg_check;

typedef void (*rg_check_callback)(const rg_check* check, void* user);

/* Runs the oracle and invariant suite; quick != 0 skips the slow checks. */
RG_API rg_status rg_validate(int quick, rg_check_callback callback, void* user, int* passed, int* failed);

#ifdef __cplusplus
}
#endif

#endif
