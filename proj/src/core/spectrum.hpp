#pragma once

#include "core/core_model.hpp"

#include <Eigen/Core>

#include <array>
#include <complex>

namespace rydgauge {

enum class Label { one, plus, minus };
inline constexpr std::array<Label, 3> all_labels{Label::one, Label::plus, Label::minus};
const char* to_string(Label label);
// "1", "+", "-" or the words one/plus/minus.
Label parse_label(const std::string& text);

struct PairConfiguration {
  Vec3 position_a = Vec3::Zero();
  Vec3 position_b = Vec3::Zero();
  double separation() const { return (position_a - position_b).norm(); }
};

// Basis {psi-, ee, psi+, gg}.
Eigen::Matrix4cd build_hamiltonian(const PairModel& model, const PairConfiguration& config);
// Bare product basis {ee, eg, ge, gg}, built from the single-atom couplings.
Eigen::Matrix4cd build_product_hamiltonian(const PairModel& model, const PairConfiguration& config);

struct Spectrum {
  double e0 = 0.0, e1 = 0.0, eplus = 0.0, eminus = 0.0;
  double energy(Label label) const;
};

// Trig Cardano roots of the coupled block, polished by Newton steps.
// Ordering: largest -> E1, middle -> E-, smallest -> E+.
Spectrum eigenvalues_analytic(double rabi, double detuning, double shift);

// Ascending eigenvalues of a Hermitian matrix (Jacobi).
std::array<double, 4> eigenvalues_numeric(const Eigen::Matrix4cd& h);

struct LabelAssignment {
  Spectrum spectrum;
  bool degenerate = false;
};

// Complex-branch formula values with s- = -eta/s+.
std::array<std::complex<double>, 3> branch_formula(double rabi, double detuning, double shift);

// Map three real roots onto labels by the branch formula. With a degeneracy,
// `previous` (if given) decides by continuity.
LabelAssignment assign_labels(const std::array<double, 3>& roots, double rabi, double detuning, double shift,
                              const Spectrum* previous = nullptr);

// Real amplitudes on (ee, psi+, gg) with the position phases removed, for
// |Omega| = 1. Sign fixed so the gg amplitude is >= 0.
struct LadderState {
  double energy = 0.0;
  double cal_e = 0.0;  // E - delta
  double cal_f = 0.0;  // E + delta - V
  double norm = 0.0;   // N
  double ce = 0.0, cplus = 0.0, cg = 0.0;
  bool fallback = false;
};

LadderState ladder_state(const PairModel& model, double rho, Label label);
std::array<LadderState, 3> ladder_states(const PairModel& model, double rho);

struct EigenState {
  Label label = Label::one;
  double energy = 0.0;
  double cal_e = 0.0, cal_f = 0.0, norm = 0.0;
  Eigen::Vector4cd coefficients;  // basis {psi-, ee, psi+, gg}
  bool fallback = false;
};

EigenState eigensystem(const PairModel& model, const PairConfiguration& config, Label label);

// Product-basis vector {ee, eg, ge, gg} of a labelled state (or psi- for label
// none) in the repo gauge.
Eigen::Vector4cd product_state(const PairModel& model, const PairConfiguration& config, Label label);
Eigen::Vector4cd psi_minus_product(const PairModel& model, const PairConfiguration& config);

}  // namespace rydgauge
