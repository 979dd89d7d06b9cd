#include "e2fock/e2group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "e2fock/specfun.hpp"

namespace e2fock {

namespace {

constexpr double kZeroRadius = 1e-12;

double parity(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

double normalize_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double out = std::remainder(a, two_pi);
  if (out <= -std::numbers::pi) out += two_pi;
  return out;
}

GroupElement::GroupElement(double r, double psi, double phi) {
  if (!std::isfinite(r) || r < 0.0) {
    throw std::invalid_argument("GroupElement: r must be finite and >= 0, got " +
                                std::to_string(r));
  }
  if (!std::isfinite(psi) || !std::isfinite(phi)) {
    throw std::invalid_argument("GroupElement: angles must be finite");
  }
  r_ = r;
  psi_ = (r == 0.0) ? 0.0 : normalize_angle(psi);
  phi_ = normalize_angle(phi);
}

GroupElement GroupElement::from_translation(cplx translation, double phi) {
  const double r = std::abs(translation);
  return {r, r == 0.0 ? 0.0 : std::arg(translation), phi};
}

Eigen::Matrix3cd GroupElement::matrix() const {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(0, 0) = rotation();
  m(1, 1) = std::conj(rotation());
  m(0, 2) = translation();
  m(1, 2) = std::conj(translation());
  m(2, 2) = 1.0;
  return m;
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  const cplx t = g1.translation() + g1.rotation() * g2.translation();
  return GroupElement::from_translation(t, g1.phi() + g2.phi());
}

GroupElement inverse(const GroupElement& g) {
  const cplx inv_rot = std::conj(g.rotation());
  return GroupElement::from_translation(-inv_rot * g.translation(), -g.phi());
}

bool approx_equal(const GroupElement& a, const GroupElement& b, double tol) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff() <= tol;
}

GeneratorAction act_on_generator(const GroupElement& g) {
  return {g.rotation(), g.translation()};
}

cplx u_matrix_element(const GroupElement& g, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("u_matrix_element: negative index");
  const double r = g.r();
  if (r < kZeroRadius) {
    return m == n ? std::polar(1.0, -n * g.phi()) : cplx{0.0, 0.0};
  }
  const int lo = std::min(m, n);
  const int hi = std::max(m, n);
  const int d = hi - lo;
  const double log_mod = d * std::log(r) - 0.5 * r * r +
                         0.5 * (specfun::log_factorial(hi) - specfun::log_factorial(lo)) -
                         specfun::log_factorial(d);
  const double kummer = specfun::kummer_phi(lo, 1 + d, r * r);
  const double sign = (m >= n) ? parity(d) : 1.0;
  const cplx phase = std::polar(1.0, (m - n) * g.psi() - m * g.phi());
  return sign * std::exp(log_mod) * kummer * phase;
}

cplx u_matrix_element_hyp2f0(const GroupElement& g, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("u_matrix_element: negative index");
  const double r = g.r();
  if (r < kZeroRadius) {
    return m == n ? std::polar(1.0, -n * g.phi()) : cplx{0.0, 0.0};
  }
  const double log_mod = (n + m) * std::log(r) - 0.5 * r * r -
                         0.5 * (specfun::log_factorial(n) + specfun::log_factorial(m));
  const double series = specfun::hyp2f0_poly(m, n, -1.0 / (r * r));
  const cplx phase = std::polar(1.0, (m - n) * g.psi() - m * g.phi());
  return parity(m) * std::exp(log_mod) * series * phase;
}

FockMatrix u_matrix(const GroupElement& g, int dim) {
  if (dim < 2) throw std::invalid_argument("u_matrix: dim must be >= 2");
  FockMatrix u = FockMatrix::Zero(dim, dim);
  const double r = g.r();
  if (r < kZeroRadius) {
    for (int n = 0; n < dim; ++n) u(n, n) = std::polar(1.0, -n * g.phi());
    return u;
  }
  const double log_r = std::log(r);
  const double r2 = r * r;
  // One Kummer recurrence per diagonal n - m = +-d.
  for (int d = 0; d < dim; ++d) {
    const int len = dim - d;
    const std::vector<double> kummer = specfun::kummer_phi_sequence(len - 1, 1 + d, r2);
    for (int j = 0; j < len; ++j) {
      const double log_mod = d * log_r - 0.5 * r2 +
                             0.5 * (specfun::log_factorial(j + d) - specfun::log_factorial(j)) -
                             specfun::log_factorial(d);
      const double mod = std::exp(log_mod) * kummer[j];
      // Above the diagonal: m = j, n = j + d.
      u(j, j + d) = mod * std::polar(1.0, -d * g.psi() - j * g.phi());
      if (d > 0) {
        // Below: m = j + d, n = j.
        u(j + d, j) = parity(d) * mod * std::polar(1.0, d * g.psi() - (j + d) * g.phi());
      }
    }
  }
  return u;
}

IrrepLabel::IrrepLabel(double lambda, int k) : lambda_(lambda), k_(k) {
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw std::invalid_argument("IrrepLabel: weight must be finite and > 0, got " +
                                std::to_string(lambda));
  }
}

cplx i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

cplx irrep_element(const IrrepLabel& row, int n, const GroupElement& g) {
  const int k = row.k();
  const cplx phase = std::polar(1.0, -(n * g.phi() + (k - n) * g.psi()));
  return i_pow(n - k) * phase * specfun::bessel_j(n - k, row.lambda() * g.r());
}

}  // namespace e2fock
