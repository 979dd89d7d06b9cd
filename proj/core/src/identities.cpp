#include "e2fock/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "e2fock/fock.hpp"
#include "e2fock/repk.hpp"
#include "e2fock/specfun.hpp"

namespace e2fock {

CheckReport CheckReport::make(std::string name, std::string equation, std::vector<Param> params,
                              double residual, double tolerance, std::string detail) {
  CheckReport r;
  r.name = std::move(name);
  r.equation = std::move(equation);
  r.params = std::move(params);
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = residual <= tolerance;  // false for NaN
  r.detail = std::move(detail);
  return r;
}

CheckReport CheckReport::error(std::string name, std::string equation, std::vector<Param> params,
                               std::string detail) {
  return make(std::move(name), std::move(equation), std::move(params),
              std::numeric_limits<double>::quiet_NaN(), 0.0, std::move(detail));
}

namespace identities {

namespace {

using specfun::log_factorial;

double parity(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error("precondition violated: " + what);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Basis matrix D^lambda_n with the largest support that fits in dim.
FockMatrix basis_matrix(double lambda, int n, int dim) {
  const int zmax = dim - std::abs(n) - 1;
  return to_matrix(basis_d(IrrepLabel(lambda, n), zmax).function, dim);
}

}  // namespace

SeriesSum identity_a_series(int k, double x, double r) {
  const int b = 1 + k;
  const double x2 = x * x;
  const double log_r2 = 2.0 * std::log(r);
  // |Phi(-n, b; x^2)| <= e^{x^2/2} bounds every remaining term.
  const double phi_bound = std::exp(0.5 * x2);
  SeriesSum out;
  double prev = 1.0;
  double cur = 1.0 - x2 / b;
  for (int n = 0; n < 5000; ++n) {
    const double phi = (n == 0) ? 1.0 : cur;
    const double weight = std::exp(n * log_r2 - log_factorial(n));
    const double term = weight * phi;
    out.value += term;
    out.abs_sum += std::abs(term);
    out.terms = n + 1;
    if (n >= 1) {
      const double next = ((b + 2.0 * n - x2) * cur - n * prev) / (n + b);
      prev = cur;
      cur = next;
    }
    if (n > r * r && weight * phi_bound < 1e-18 * out.abs_sum) break;
  }
  return out;
}

double identity_a_closed_form(int k, double x, double r) {
  const double log_scale = log_factorial(k) - k * std::log(x * r) + r * r;
  return std::exp(log_scale) * specfun::bessel_j(k, 2.0 * x * r);
}

CheckReport identity_a(int k, double x, double r, double tol) {
  const std::vector<Param> params{{"k", std::int64_t{k}}, {"x", x}, {"r", r}};
  require(k >= 0 && k <= 20, "0 <= k <= 20");
  require(x > 0.0 && x <= 4.0, "0 < x <= 4");
  require(r > 0.0 && r <= 3.0, "0 < r <= 3");
  const SeriesSum lhs = identity_a_series(k, x, r);
  const double rhs = identity_a_closed_form(k, x, r);
  const double scale = std::max(lhs.abs_sum, std::abs(rhs));
  const double residual = std::abs(lhs.value - rhs) / scale;
  return CheckReport::make("identity-a", formula::identity_a, params, residual, tol,
                           "lhs=" + fmt(lhs.value) + " rhs=" + fmt(rhs) + " lhs/rhs=" +
                               fmt(lhs.value / rhs) + " terms=" + std::to_string(lhs.terms));
}

CheckReport identity_b(int m, int k, double x, double r, double tol) {
  const std::vector<Param> params{
      {"m", std::int64_t{m}}, {"k", std::int64_t{k}}, {"x", x}, {"r", r}};
  require(m >= 0 && m <= 15, "0 <= m <= 15");
  require(k >= 0 && k <= 10, "0 <= k <= 10");
  require(r >= 0.25 && r <= 3.0, "0.25 <= r <= 3");
  require(x > 0.0 && x <= 3.0, "0 < x <= 3");

  const double lhs = std::exp(log_factorial(m + k) - log_factorial(m) - log_factorial(k) +
                              k * std::log(x / r)) *
                     specfun::kummer_phi(m, 1 + k, x * x);
  constexpr int kLast = 80;
  const double log_xr = std::log(x * r);
  const double inv_r2 = -1.0 / (r * r);
  double sum = 0.0;
  double abs_sum = 0.0;
  double tail = 0.0;
  for (int n = 0; n <= kLast; ++n) {
    const double t = parity(n) * std::exp(n * log_xr - log_factorial(n)) *
                     specfun::hyp2f0_poly(m + k, n, inv_r2) *
                     specfun::bessel_j(k - n, 2.0 * x * r);
    sum += t;
    abs_sum += std::abs(t);
    if (n >= kLast - 1) tail += std::abs(t);
  }
  const double scale = std::max(std::abs(lhs), abs_sum);
  std::string detail = "lhs=" + fmt(lhs) + " rhs=" + fmt(sum) + " tail=" + fmt(tail);
  if (tail > 1e-12 * scale) {
    return CheckReport::make("identity-b", formula::identity_b, params,
                             std::numeric_limits<double>::quiet_NaN(), tol,
                             detail + " non-convergent tail");
  }
  return CheckReport::make("identity-b", formula::identity_b, params,
                           std::abs(lhs - sum) / scale, tol, detail);
}

CheckReport addition_residual(const GroupElement& g, const IrrepLabel& label, int dim, int nmax,
                              double tol) {
  const double lambda = label.lambda();
  const int k = label.k();
  const std::vector<Param> params{{"lambda", lambda}, {"k", std::int64_t{k}},
                                  {"r", g.r()},       {"psi", g.psi()},
                                  {"phi", g.phi()},   {"dim", std::int64_t{dim}}};
  require(std::abs(k) + 2 <= dim, "|k| + 2 <= dim");

  const FockMatrix u = u_matrix(g, dim);
  const FockMatrix lhs = u * basis_matrix(lambda, k, dim) * u.adjoint();

  FockMatrix rhs = FockMatrix::Zero(dim, dim);
  std::vector<std::pair<int, cplx>> used;
  const double arg = lambda * g.r();
  for (int n = k - nmax; n <= k + nmax; ++n) {
    if (std::abs(n) + 2 > dim) continue;
    const double j = specfun::bessel_j(n - k, arg);
    if (std::abs(n - k) > arg && std::abs(j) < 1e-16) continue;
    const cplx t = irrep_element(label, n, g);
    rhs += t * basis_matrix(lambda, n, dim);
    used.emplace_back(n, t);
  }

  const int block = fock::safe_block(g.r(), dim);
  const double lhs_norm = fock::block_norm(lhs, block);
  const double residual = fock::block_norm(lhs - rhs, block) / lhs_norm;
  std::string detail = std::string("phase ") + kBasisPhaseConvention + "; safe block " +
                       std::to_string(block) + "; terms " + std::to_string(used.size());
  CheckReport report = CheckReport::make("addition-theorem", formula::addition, params,
                                         residual, tol, std::move(detail));
  if (!report.pass) {
    // Best-fit coefficient of each D_n on the safe block against t_kn.
    double worst = 0.0;
    int worst_n = k;
    for (const auto& [n, t] : used) {
      const FockMatrix dn = basis_matrix(lambda, n, dim).topLeftCorner(block, block);
      const double dn2 = dn.squaredNorm();
      if (dn2 == 0.0 || std::abs(t) < 1e-8) continue;
      const cplx fit = (dn.adjoint() * lhs.topLeftCorner(block, block)).trace() / dn2;
      const double mismatch = std::abs(std::arg(fit / t));
      if (mismatch > worst) {
        worst = mismatch;
        worst_n = n;
      }
    }
    report.detail += "; worst phase mismatch " + fmt(worst) + " at n=" + std::to_string(worst_n);
  }
  return report;
}

CheckReport addition_vacuum_closure(const IrrepLabel& label, double r, int dim, double tol) {
  const int k = label.k();
  const double lambda = label.lambda();
  const double x = 0.5 * lambda;
  const std::vector<Param> params{
      {"lambda", lambda}, {"k", std::int64_t{k}}, {"r", r}, {"dim", std::int64_t{dim}}};
  require(k >= 0, "k >= 0");
  require(r > 0.0, "r > 0");

  const GroupElement g(r, 0.0, 0.0);
  const FockMatrix u = u_matrix(g, dim);
  const cplx lhs00 = (u * basis_matrix(lambda, k, dim) * u.adjoint())(0, 0);
  // Only D_0 has a nonzero vacuum element.
  const cplx rhs00 = irrep_element(label, 0, g) * basis_matrix(lambda, 0, dim)(0, 0);

  // <0|U D_k U*|0> = e^{-r^2} (i x r)^k / k! e^{-x^2/2} * sum_n r^{2n}/n! Phi(-n,1+k;x^2)
  const double log_conv = r * r + log_factorial(k) - k * std::log(x * r) + 0.5 * x * x;
  const cplx conv = std::exp(log_conv) / i_pow(k);
  const cplx from_lhs = lhs00 * conv;
  const cplx from_rhs = rhs00 * conv;
  const SeriesSum series = identity_a_series(k, x, r);
  const double scale = std::max(series.abs_sum, std::abs(series.value));
  const double residual =
      std::max(std::abs(from_lhs - series.value), std::abs(from_rhs - series.value)) / scale;
  return CheckReport::make("addition-vacuum-closure", formula::vacuum_closure, params, residual,
                           tol,
                           "matrix=" + fmt(from_lhs.real()) + " bessel=" + fmt(from_rhs.real()) +
                               " series=" + fmt(series.value));
}

CheckReport hille_hardy_residual(int k, double x, double y, double zq, double tol) {
  const std::vector<Param> params{{"k", std::int64_t{k}}, {"x", x}, {"y", y}, {"zq", zq}};
  require(k >= 0, "k >= 0");
  require(x > 0.0 && y > 0.0, "x, y > 0");
  require(zq > 0.0 && zq <= 0.95, "0 < zq <= 0.95");

  constexpr int kCap = 4000;
  double lx_prev = 1.0, lx = 1.0;
  double ly_prev = 1.0, ly = 1.0;
  double sum = 0.0;
  double abs_sum = 0.0;
  double zn = 1.0;
  int quiet = 0;
  int n = 0;
  bool converged = false;
  for (; n < kCap; ++n) {
    if (n == 1) {
      lx = 1.0 + k - x;
      ly = 1.0 + k - y;
    } else if (n > 1) {
      const double nx = ((2.0 * (n - 1) + 1.0 + k - x) * lx - (n - 1 + k) * lx_prev) / n;
      const double ny = ((2.0 * (n - 1) + 1.0 + k - y) * ly - (n - 1 + k) * ly_prev) / n;
      lx_prev = lx;
      lx = nx;
      ly_prev = ly;
      ly = ny;
    }
    double ratio = 1.0;  // n!/(n+k)!
    for (int i = 1; i <= k; ++i) ratio /= (n + i);
    const double term = ratio * lx * ly * zn;
    sum += term;
    abs_sum += std::abs(term);
    zn *= zq;
    quiet = (std::abs(term) < 1e-18 * abs_sum) ? quiet + 1 : 0;
    if (n > 10 && quiet >= 8) {
      converged = true;
      break;
    }
  }
  const double w = 2.0 * std::sqrt(x * y * zq) / (1.0 - zq);
  const double log_rhs = -0.5 * k * std::log(x * y * zq) - std::log(1.0 - zq) -
                         zq * (x + y) / (1.0 - zq) + w;
  const double rhs = std::exp(log_rhs) * specfun::bessel_i_exp_scaled(k, w);
  std::string detail = "lhs=" + fmt(sum) + " rhs=" + fmt(rhs) + " terms=" + std::to_string(n + 1);
  if (!converged) {
    return CheckReport::make("hille-hardy", formula::hille_hardy, params,
                             std::numeric_limits<double>::quiet_NaN(), tol,
                             detail + " slow convergence: hit the term cap");
  }
  const double scale = std::max(abs_sum, std::abs(rhs));
  return CheckReport::make("hille-hardy", formula::hille_hardy, params,
                           std::abs(sum - rhs) / scale, tol, detail);
}

std::vector<double> orthogonality_profile_series(int k, double lambda1, double lambda2,
                                                 int zmax) {
  const int kk = std::abs(k);
  const std::vector<cplx> f1 = basis_radial(lambda1, k, zmax);
  const std::vector<cplx> f2 = basis_radial(lambda2, k, zmax);
  std::vector<double> out(f1.size());
  double acc = 0.0;
  for (int z = 0; z <= zmax; ++z) {
    double w = 1.0;
    for (int i = 1; i <= kk; ++i) w *= static_cast<double>(z + i);
    acc += (std::conj(f1[z]) * f2[z]).real() * w;
    out[z] = acc;
  }
  return out;
}

double orthogonality_profile(int k, double lambda1, double lambda2, int zmax) {
  return orthogonality_profile_series(k, lambda1, lambda2, zmax).back();
}

cplx cross_winding_product(int k, int n, double lambda1, double lambda2, int zmax) {
  return inner_product(basis_d(IrrepLabel(lambda1, k), zmax).function,
                       basis_d(IrrepLabel(lambda2, n), zmax).function);
}

double classical_limit_error(const IrrepLabel& label, double r, double psi, double sigma) {
  if (!(sigma > 0.0) || !(r > 0.0)) {
    throw std::domain_error("classical_limit_error: sigma and r must be positive");
  }
  const int k = label.k();
  const int kk = std::abs(k);
  const double scaled_lambda = std::sqrt(sigma) * label.lambda();
  const int zeta = static_cast<int>(std::llround(r * r / sigma));
  const cplx radial = basis_radial(scaled_lambda, k, std::max(zeta, 1))[zeta];
  // z* -> (r/sqrt(sigma)) e^{-i psi} for k >= 0, z -> (r/sqrt(sigma)) e^{i psi} for k < 0.
  const double modulus = std::pow(r / std::sqrt(sigma), kk);
  const cplx angular = std::polar(1.0, (k >= 0 ? -1.0 : 1.0) * kk * psi);
  const cplx value = modulus * angular * radial;
  const cplx target = irrep_element(label, 0, GroupElement(r, psi, 0.0));
  return std::abs(value - target);
}

double kummer_bessel_limit_residual(int n, int b, double c) {
  if (n < 1 || b < 1 || !(c > 0.0)) {
    throw std::domain_error("kummer_bessel_limit_residual: need n >= 1, b >= 1, c > 0");
  }
  const double phi = specfun::kummer_phi(n, b, -c / n);
  const double limit = std::exp(log_factorial(b - 1) + 0.5 * (1.0 - b) * std::log(c)) *
                       specfun::bessel_i(b - 1, 2.0 * std::sqrt(c));
  return std::abs(phi / limit - 1.0);
}

}  // namespace identities
}  // namespace e2fock
