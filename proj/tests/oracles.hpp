#pragma once

// Independent reference computations used only by tests.

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>

#include "e2fock/e2group.hpp"
#include "e2fock/fock.hpp"

namespace e2fock::oracle {

/// exp(beta z* - conj(beta) z) exp(-i phi zeta) with beta = -r e^{i(psi - phi)},
/// built from truncated ladder matrices and Eigen's matrix exponential.
inline FockMatrix displacement_rotation(const GroupElement& g, int dim) {
  const cplx beta = -std::polar(g.r(), g.psi() - g.phi());
  const FockMatrix z = fock::annihilator(dim);
  const FockMatrix gen = beta * z.adjoint() - std::conj(beta) * z;
  FockMatrix rot = FockMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) rot(n, n) = std::polar(1.0, -n * g.phi());
  return gen.exp() * rot;
}

/// max |u - c * oracle| over the leading block, with the global phase c fixed by
/// matching the (0, 0) entries.
inline double phase_matched_error(const FockMatrix& u, const FockMatrix& ref, int block) {
  const cplx c = u(0, 0) / ref(0, 0);
  return (u - c * ref).topLeftCorner(block, block).cwiseAbs().maxCoeff();
}

/// J_n(x) = (1/pi) int_0^pi cos(n t - x sin t) dt by the trapezoid rule, which
/// converges geometrically for this periodic integrand.
inline double bessel_j_quadrature(int n, double x, int points = 4096) {
  const double h = M_PI / points;
  double sum = 0.5 * (std::cos(0.0) + std::cos(n * M_PI));
  for (int i = 1; i < points; ++i) {
    const double t = i * h;
    sum += std::cos(n * t - x * std::sin(t));
  }
  return sum * h / M_PI;
}

}  // namespace e2fock::oracle
