#pragma once

// Special functions with integer parameters: terminating Kummer and 2F0
// series, generalized Laguerre polynomials, integer-order Bessel J and I.
//
// Everything in this header is pure and reentrant.

#include <cmath>
#include <vector>

namespace e2fock::specfun {

/// A real number carried as `value * exp(log_scale)`.
///
/// `log_scale == 0` means `value` is the plain function value. Scaled values
/// are produced where the plain value would overflow (modified Bessel I for
/// large arguments).
struct SpecValue {
  double value = 0.0;
  double log_scale = 0.0;

  /// Plain value; overflows to inf when log_scale exceeds ~709.
  double reconstruct() const { return value * std::exp(log_scale); }
  /// Natural log of |value * exp(log_scale)|.
  double log_abs() const { return std::log(std::abs(value)) + log_scale; }
};

/// ln(n!). Exact table for n <= 20, Stirling series above.
double log_factorial(int n);

/// Phi(-n, b; x) = 1F1(-n; b; x), a polynomial of degree n in x.
///
/// Evaluated with the contiguous relation in the first parameter, which is
/// the normalized Laguerre recurrence:
///   (n+b) Phi_{n+1} = (b + 2n - x) Phi_n - n Phi_{n-1}.
/// Throws std::domain_error for n < 0 or b < 1.
double kummer_phi(int n, int b, double x);

/// Phi(-j, b; x) for j = 0..n_max in one pass of the recurrence.
std::vector<double> kummer_phi_sequence(int n_max, int b, double x);

/// 2F0(-m, -n; ; x) = sum_{j <= min(m,n)} (-m)_j (-n)_j x^j / j!.
///
/// The sum alternates strongly for x < 0, so it is accumulated with
/// double-double Horner evaluation. Symmetric in (m, n) bit for bit.
double hyp2f0_poly(int m, int n, double x);

/// Generalized Laguerre polynomial L^k_n(x) by the three-term recurrence in n.
double laguerre(int n, int k, double x);

/// L^k_j(x) for j = 0..n_max.
std::vector<double> laguerre_sequence(int n_max, int k, double x);

/// Bessel function of the first kind J_nu(x) for integer nu.
///
/// Power series (Neumaier-compensated) where it does not cancel, Miller's
/// downward recurrence normalized by J_0 + 2 sum J_2k = 1 otherwise.
/// Negative orders use J_{-nu} = (-1)^nu J_nu.
double bessel_j(int nu, double x);

/// Modified Bessel function I_nu(x), integer nu, x >= 0.
/// Throws std::domain_error for x < 0. Overflows to inf past x ~ 700;
/// use bessel_i_scaled there.
double bessel_i(int nu, double x);

/// I_nu(x) as a SpecValue: plain for x <= 500, otherwise value = I_nu(x)e^{-x}
/// with log_scale = x.
SpecValue bessel_i_scaled(int nu, double x);

/// I_nu(x) * e^{-x}, never overflows.
double bessel_i_exp_scaled(int nu, double x);

}  // namespace e2fock::specfun
