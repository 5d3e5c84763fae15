#include "core/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rydgauge {

using cd = std::complex<double>;

double hermiticity_residual(const Eigen::MatrixXcd& h) {
  const double scale = std::max(h.norm(), 1e-300);
  return (h - h.adjoint()).norm() / scale;
}

HermitianEigen jacobi_eigen(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("jacobi_eigen: matrix must be square");
  if (hermiticity_residual(h) > 1e-12) throw std::invalid_argument("jacobi_eigen: matrix is not Hermitian");

  const Eigen::Index n = h.rows();
  Eigen::MatrixXcd a = 0.5 * (h + h.adjoint());
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
  constexpr double eps = 1e-17;

  int sweep = 0;
  for (; sweep < 60; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const cd apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real(), aqq = a(q, q).real();
        if (mag <= eps * std::sqrt(std::abs(app) * std::abs(aqq))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        rotated = true;
        // Phase away the off-diagonal element, then a real rotation.
        const cd phase = apq / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // U on (p,q): [[c, s], [-s conj(phase), c conj(phase)]]
        const cd upp = c, upq = s, uqp = -s * std::conj(phase), uqq = c * std::conj(phase);
        for (Eigen::Index k = 0; k < n; ++k) {  // columns: A U
          const cd akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
          const cd vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {  // rows: U^H (A U)
          const cd apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
    if (!rotated) break;
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = a(order[i], order[i]).real();
    out.vectors.col(i) = v.col(order[i]);
  }
  out.sweeps = sweep + 1;
  return out;
}

}  // namespace rydgauge
