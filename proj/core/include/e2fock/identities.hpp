#pragma once

// Numerical verification of the global identities that follow from the
// E(2) action: the operator addition theorem, the two scalar identities it
// yields by sandwiching, the Hille-Hardy bilinear sum, the concentration of
// the trace inner product of eigenbasis elements, and the two limits
// (commutative sigma -> 0 and Kummer -> modified Bessel).

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "e2fock/e2group.hpp"

namespace e2fock {

struct Param {
  std::string name;
  std::variant<std::int64_t, double> value;
};

/// Outcome of one verification. pass == (residual <= tolerance); a NaN
/// residual (precondition violation, non-convergence) never passes.
struct CheckReport {
  std::string name;
  std::string equation;
  std::vector<Param> params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;

  static CheckReport make(std::string name, std::string equation, std::vector<Param> params,
                          double residual, double tolerance, std::string detail = {});
  /// Record for a check whose inputs violate its preconditions.
  static CheckReport error(std::string name, std::string equation, std::vector<Param> params,
                           std::string detail);
};

namespace identities {

namespace formula {
inline constexpr const char* identity_a =
    "sum_n r^(2n)/n! Phi(-n,1+k;x^2) = k! (xr)^(-k) e^(r^2) J_k(2xr)";
inline constexpr const char* identity_b =
    "(m+k)!/(m!k!) (x/r)^k Phi(-m,1+k;x^2) = sum_n (-xr)^n/n! 2F0(-m-k,-n;-1/r^2) J_(k-n)(2xr)";
inline constexpr const char* addition =
    "U(g) D^lambda_k U*(g) = sum_n t^lambda_kn(g) D^lambda_n";
inline constexpr const char* vacuum_closure =
    "<0| U D^lambda_k U* |0> = <0| sum_n t^lambda_kn D^lambda_n |0>";
inline constexpr const char* hille_hardy =
    "sum_n n!/(n+k)! L^k_n(x) L^k_n(y) z^n = (xyz)^(-k/2)/(1-z) e^(-z(x+y)/(1-z)) "
    "I_k(2 sqrt(xyz)/(1-z))";
inline constexpr const char* orthogonality =
    "(D^lambda_k, D^lambda'_n) = delta_kn delta(lambda^2 - lambda'^2)";
inline constexpr const char* classical_limit =
    "lim_{sigma->0} D^{sqrt(sigma) lambda}_k(r e^{i psi}/sqrt(sigma)) = t^lambda_k0(g)";
inline constexpr const char* kummer_limit =
    "lim_{a->inf} Phi(a,b;c/a) = Gamma(b) c^((1-b)/2) I_(b-1)(2 sqrt(c))";
}  // namespace formula

/// A truncated series together with the sum of its absolute terms.
struct SeriesSum {
  double value = 0.0;
  double abs_sum = 0.0;
  int terms = 0;
};

/// sum_n r^{2n}/n! Phi(-n, 1+k; x^2), stopped once the remaining tail is below
/// 1e-18 of the accumulated absolute sum.
SeriesSum identity_a_series(int k, double x, double r);
/// k! (xr)^{-k} e^{r^2} J_k(2xr), scale factors combined in log space.
double identity_a_closed_form(int k, double x, double r);

/// Residual |lhs - rhs| / max(sum |terms|, |rhs|).
/// Preconditions: 0 <= k <= 20, 0 < x <= 4, 0 < r <= 3 (std::domain_error otherwise).
/// The detail carries lhs/rhs, so a constant-factor mismatch would be visible.
CheckReport identity_a(int k, double x, double r, double tol = 1e-10);

/// Right-hand series truncated at n = 80; the two last terms serve as tail
/// estimate and a tail above 1e-12 of the scale fails the check.
/// Preconditions: m <= 15, k <= 10, 0.25 <= r <= 3, 0 < x <= 3.
CheckReport identity_b(int m, int k, double x, double r, double tol = 1e-9);

/// Frobenius residual of the addition theorem on the safe block of a
/// dim-truncated Fock space, relative to the left side. The n-sum stops where
/// |J_{n-k}(lambda r)| < 1e-16 past the turning point, or at |n-k| = nmax.
/// On failure the detail lists the worst per-n phase mismatch.
CheckReport addition_residual(const GroupElement& g, const IrrepLabel& label, int dim = 96,
                              int nmax = 60, double tol = 1e-7);

/// <0|.|0> element of both sides of the addition theorem for g = g(r, 0, 0),
/// converted to the identity_a series sum and compared with identity_a_series.
CheckReport addition_vacuum_closure(const IrrepLabel& label, double r, int dim = 96,
                                    double tol = 1e-9);

/// Preconditions: k >= 0, x, y > 0, 0 < zq <= 0.95. Terms are capped at 4000;
/// hitting the cap fails the check with a slow-convergence detail.
CheckReport hille_hardy_residual(int k, double x, double y, double zq, double tol = 1e-8);

/// (D^lambda1_k, D^lambda2_k) truncated to zeta <= zmax.
double orthogonality_profile(int k, double lambda1, double lambda2, int zmax);
/// The same inner product for every cutoff 0..zmax.
std::vector<double> orthogonality_profile_series(int k, double lambda1, double lambda2, int zmax);
/// (D^lambda1_k, D^lambda2_n) through the generic inner product; exactly zero for k != n.
cplx cross_winding_product(int k, int n, double lambda1, double lambda2, int zmax);

/// |D^{sqrt(sigma) lambda}_k at ((r/sqrt(sigma)) e^{i psi}, zeta = round(r^2/sigma))
///   - t^lambda_{k0}(g(r, psi, 0))|.
double classical_limit_error(const IrrepLabel& label, double r, double psi, double sigma);

/// |Phi(-n, b; -c/n) / (Gamma(b) c^{(1-b)/2} I_{b-1}(2 sqrt(c))) - 1|.
///
/// The first parameter runs to -infinity, and the argument c/a = -c/n keeps the
/// limit on the modified-Bessel side.
double kummer_bessel_limit_residual(int n, int b, double c);
inline constexpr const char* kKummerLimitSignPattern = "a = -n, argument c/a = -c/n";

}  // namespace identities
}  // namespace e2fock
