#pragma once

// Functions on the Heisenberg algebra, F = sum_n (f_n(zeta) z^n + z*^n f_-n(zeta)),
// with the trace inner product (F, G) = tr(F* G), the generators of the
//   p F = 2[F, z*],   pbar F = 2[z, F],   h F = [zeta, F]
// regular action realized exactly on radial coefficients, and the joint
// eigenbasis D^lambda_k of p p* and h.

#include <complex>
#include <map>
#include <vector>

#include "e2fock/e2group.hpp"
#include "e2fock/fock.hpp"

namespace e2fock {

/// Radial coefficients of a finite-support function on H.
///
/// Winding n > 0 stores f_n(zeta) z^n, winding n < 0 stores z*^{|n|} f_n(zeta),
/// winding 0 is the diagonal part f_0(zeta). Coefficient vectors are indexed by
/// zeta = 0, 1, ...; values past the end are zero.
class AlgebraFunction {
 public:
  using Coefficients = std::vector<cplx>;
  using Terms = std::map<int, Coefficients>;

  AlgebraFunction() = default;

  static AlgebraFunction monomial(int winding, Coefficients radial);

  /// Replaces the term of the given winding. Empty vectors erase it.
  void set_term(int winding, Coefficients radial);

  /// nullptr when the winding is absent.
  const Coefficients* term(int winding) const;

  /// f_n(zeta); zero outside the stored support.
  cplx coefficient(int winding, int zeta) const;

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Largest zeta with a stored coefficient over all terms (-1 if empty).
  int zmax() const;
  /// Largest |winding| (0 if empty).
  int max_winding() const;

  /// F*, mapping f_n z^n to z*^n conj(f_n).
  AlgebraFunction adjoint() const;

  AlgebraFunction& operator+=(const AlgebraFunction& other);
  AlgebraFunction& operator-=(const AlgebraFunction& other);
  AlgebraFunction& operator*=(cplx s);

  friend AlgebraFunction operator+(AlgebraFunction a, const AlgebraFunction& b) { return a += b; }
  friend AlgebraFunction operator-(AlgebraFunction a, const AlgebraFunction& b) { return a -= b; }
  friend AlgebraFunction operator*(cplx s, AlgebraFunction a) { return a *= s; }

  friend bool operator==(const AlgebraFunction&, const AlgebraFunction&) = default;

 private:
  Terms terms_;
};

/// (F, G) = tr(F* G) in closed form: windings must match, and each winding n
/// contributes sum_zeta conj(f_n) g_n (zeta + |n|)!/zeta!.
cplx inner_product(const AlgebraFunction& f, const AlgebraFunction& g);

/// Largest |coefficient| over all terms.
double max_abs(const AlgebraFunction& f);

/// Hilbert-Schmidt norm sqrt((F, F)).
double hs_norm(const AlgebraFunction& f);

/// F as a truncated Fock operator. Throws std::invalid_argument unless every
/// term satisfies support + |winding| < dim.
FockMatrix to_matrix(const AlgebraFunction& f, int dim);

/// pF = 2[F, z*]. On f(zeta) z^n, n >= 1: 2(n f(zeta) + zeta(f(zeta) - f(zeta-1))) z^{n-1};
/// on z*^n f(zeta), n >= 0: 2 z*^{n+1} (f(zeta+1) - f(zeta)).
AlgebraFunction op_p(const AlgebraFunction& f);
/// pbar F = 2[z, F].
AlgebraFunction op_pbar(const AlgebraFunction& f);
/// hF = [zeta, F]; winding n is multiplied by -n, so z*^k-terms get +k.
AlgebraFunction op_h(const AlgebraFunction& f);
/// p* = -pbar with respect to the trace inner product.
AlgebraFunction adjoint_p(const AlgebraFunction& f);

/// Generators p_1, p_2, p_3 of the one-parameter subgroups g(eps, 0), g(i eps, 0),
/// g(0, eps): p_1 = (p + pbar)/2, p_2 = i(p - pbar)/2, p_3 = -i h.
enum class Subgroup { translation_real, translation_imag, rotation };
AlgebraFunction generator(Subgroup s, const AlgebraFunction& f);
GroupElement subgroup_element(Subgroup s, double eps);

/// Phase convention of the eigenbasis: (-lambda^2)^{k/2} is taken as (i lambda)^k.
inline constexpr const char* kBasisPhaseConvention = "(-lambda^2)^{k/2} := (i lambda)^{|k|}";

/// f^lambda_k(zeta) = ((i lambda)^|k| / (2^|k| |k|!)) e^{-lambda^2/8} Phi(-zeta, 1+|k|; lambda^2/4)
/// for zeta = 0..zmax.
std::vector<cplx> basis_radial(double lambda, int k, int zmax);

/// Same values through L^k_zeta: zeta!/(k+zeta)! * L^k_zeta(lambda^2/4) replaces Phi.
std::vector<cplx> basis_radial_laguerre(double lambda, int k, int zmax);

struct BasisFunction {
  IrrepLabel label;
  AlgebraFunction function;
};

/// D^lambda_k = z*^k f_k(zeta) for k >= 0 and f_|k|(zeta) z^|k| for k < 0,
/// truncated to zeta <= zmax. Throws std::invalid_argument for zmax < 1.
BasisFunction basis_d(const IrrepLabel& label, int zmax);

/// Residual of (k+1+z) f(z+1) + (lambda^2/4 - 2z - k - 1) f(z) + z f(z-1) at zeta,
/// relative to the largest term, with lambda^2/4 f(z) and (2z+k+1) f(z) counted apart. Requires 0 <= zeta < f.size() - 1.
double radial_recurrence_residual(const std::vector<cplx>& f, double lambda, int k, int zeta);

struct EigenResiduals {
  double casimir = 0.0;      ///< p p* D vs lambda^2 D, max relative over zeta < zmax
  double casimir_alt = 0.0;  ///< same for the ordering p* p
  double grading = 0.0;      ///< max |h D - k D|
};

/// Applies the exact difference operators to D^lambda_k truncated at zmax.
/// The last support point is excluded: the true function has infinite support.
EigenResiduals eigen_residuals(const IrrepLabel& label, int zmax);

/// Pointwise residual of p p* F - lambda^2 F on a single-winding F, relative to
/// the local stencil magnitude. Used to compare with radial_recurrence_residual.
std::vector<double> casimir_residual_profile(const AlgebraFunction& f, double lambda,
                                             bool p_first = true);

/// T(g)F = U(g) F U(g)^* on the truncated space.
FockMatrix act_T(const GroupElement& g, const AlgebraFunction& f, int dim);

/// max over the safe block of |(T(g_eps)F - F)/eps - p_s(F)|.
double difference_quotient_error(Subgroup s, const AlgebraFunction& f, double eps, int dim);

}  // namespace e2fock
