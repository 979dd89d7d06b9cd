#pragma once

// The Euclidean group E(2) acting on the Heisenberg algebra by
//   g z  = e^{i phi} z  + r e^{i psi},
//   g z* = e^{-i phi} z* + r e^{-i psi},
// its unitary implementer U(g) on Fock space (g z = U z U*), and the
// irreducible matrix elements t^lambda_{kn}(g).

#include <Eigen/Dense>

#include <complex>

#include "e2fock/fock.hpp"

namespace e2fock {

/// E(2) element with translation r e^{i psi} and rotation e^{i phi}.
///
/// Stored canonically: r >= 0, psi and phi in (-pi, pi], psi = 0 when r = 0.
class GroupElement {
 public:
  GroupElement() = default;
  /// Throws std::invalid_argument for negative or non-finite r, or non-finite angles.
  GroupElement(double r, double psi, double phi);

  static GroupElement identity() { return {}; }
  static GroupElement from_translation(cplx translation, double phi);

  double r() const { return r_; }
  double psi() const { return psi_; }
  double phi() const { return phi_; }

  cplx translation() const { return std::polar(r_, psi_); }
  cplx rotation() const { return std::polar(1.0, phi_); }

  /// The 3x3 matrix acting on the column (z, z*, 1).
  Eigen::Matrix3cd matrix() const;

 private:
  double r_ = 0.0;
  double psi_ = 0.0;
  double phi_ = 0.0;
};

/// Maps an angle to (-pi, pi].
double normalize_angle(double a);

/// g1 g2 as the 3x3 matrix product matrix(g1) * matrix(g2):
/// rotation phi1 + phi2, translation r1 e^{i psi1} + e^{i phi1} r2 e^{i psi2}.
GroupElement compose(const GroupElement& g1, const GroupElement& g2);

GroupElement inverse(const GroupElement& g);

/// Compares the 3x3 matrices entrywise; robust to the psi ambiguity at small r.
bool approx_equal(const GroupElement& a, const GroupElement& b, double tol);

/// (alpha, beta) with g z = alpha z + beta 1.
struct GeneratorAction {
  cplx alpha;
  cplx beta;
};
GeneratorAction act_on_generator(const GroupElement& g);

/// Matrix element <m|U(g)|n> = (-1)^m e^{i(m-n)psi - i m phi}
///   * r^{n+m} e^{-r^2/2} / sqrt(n! m!) * 2F0(-m, -n; -1/r^2).
///
/// Evaluated through the equivalent Kummer form, e.g. for n >= m
///   r^{n-m} e^{-r^2/2} sqrt(n!/m!) / (n-m)! * Phi(-m, 1+n-m; r^2) * phase,
/// with all scale factors combined in log space. r < 1e-12 returns the
/// rotation diagonal delta_mn e^{-i n phi}.
cplx u_matrix_element(const GroupElement& g, int m, int n);

/// Same element via the direct 2F0 sum. Independent route for cross-checks;
/// overflows for large m, n at small r.
cplx u_matrix_element_hyp2f0(const GroupElement& g, int m, int n);

/// <m|U(g)|n> for 0 <= m, n < dim. Throws std::invalid_argument for dim < 2.
FockMatrix u_matrix(const GroupElement& g, int dim);

/// Irreducible representation label: weight lambda > 0 and integer index k.
///
/// Negative weights are rejected; D^{-lambda}_k = (-1)^k D^lambda_k is only a
/// relabeling.
class IrrepLabel {
 public:
  IrrepLabel(double lambda, int k);
  double lambda() const { return lambda_; }
  int k() const { return k_; }

 private:
  double lambda_;
  int k_;
};

/// i^n for integer n, exact.
cplx i_pow(int n);

/// t^lambda_{kn}(g) = i^{n-k} e^{-i(n phi + (k-n) psi)} J_{n-k}(lambda r),
/// with (lambda, k) taken from the label.
cplx irrep_element(const IrrepLabel& row, int n, const GroupElement& g);

}  // namespace e2fock
