#pragma once

#include <Eigen/Core>

namespace rydgauge {

struct HermitianEigen {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // columns, same order
  int sweeps = 0;
};

// Cyclic complex Jacobi. Keeps small eigenvector components accurate
// relative to their size for strongly graded matrices.
HermitianEigen jacobi_eigen(const Eigen::MatrixXcd& h);

double hermiticity_residual(const Eigen::MatrixXcd& h);

}  // namespace rydgauge
