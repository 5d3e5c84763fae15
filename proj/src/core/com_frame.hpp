#pragma once

#include "core/core_model.hpp"
#include "core/spectrum.hpp"

namespace rydgauge {

struct ComFrame {
  double total_mass = 0.0;
  double reduced_mass = 0.0;
  Vec3 R = Vec3::Zero();
  Vec3 r = Vec3::Zero();
};

ComFrame to_com(const Vec3& r_a, const Vec3& r_b, double mass_a, double mass_b);
void from_com(const ComFrame& frame, double mass_a, double mass_b, Vec3& r_a, Vec3& r_b);

struct ComVectorPotentials {
  Vec3 A_R = Vec3::Zero();
  Vec3 A_r = Vec3::Zero();
};

ComVectorPotentials com_vector_potentials(const Vec3& A_a, const Vec3& A_b, double mass_a, double mass_b);

// phi_R in hbar^2 k_L^2 / 2M, phi_r in hbar^2 k_L^2 / 2mu.
struct ComScalarPotentials {
  double phi_R = 0.0;
  double phi_r = 0.0;
};

ComScalarPotentials com_scalar_potentials(const PairModel& model, Label label, double rho, double mass_a,
                                          double mass_b);

}  // namespace rydgauge
