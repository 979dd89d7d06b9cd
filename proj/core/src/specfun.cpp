#include "e2fock/specfun.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "double_double.hpp"

namespace e2fock::specfun {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

const std::array<double, 21>& small_log_factorials() {
  static const std::array<double, 21> table = [] {
    std::array<double, 21> t{};
    std::uint64_t f = 1;
    t[0] = 0.0;
    for (int n = 1; n <= 20; ++n) {
      f *= static_cast<std::uint64_t>(n);
      t[n] = std::log(static_cast<long double>(f));
    }
    return t;
  }();
  return table;
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void require_order(int n, const char* what) {
  if (n < 0) {
    throw std::domain_error(std::string(what) + ": negative degree " + std::to_string(n));
  }
}

// J_nu(x), nu >= 0, by the ascending series. Only used where it does not cancel.
double bessel_j_series(int nu, double x) {
  const double y = 0.25 * x * x;
  CompensatedSum sum;
  double term = 1.0;
  sum.add(term);
  for (int j = 1; j < 500; ++j) {
    term *= -y / (static_cast<double>(j) * static_cast<double>(nu + j));
    sum.add(term);
    if (std::abs(term) < 1e-18 * std::abs(sum.value())) break;
  }
  const double log_pref = nu * std::log(0.5 * x) - log_factorial(nu);
  return std::exp(log_pref) * sum.value();
}

// J_nu(x), nu >= 0, x > 0, Miller's algorithm.
double bessel_j_miller(int nu, double x) {
  constexpr double kBig = 1e250;
  constexpr double kSmall = 1e-250;
  const int top = std::max(nu, static_cast<int>(x));
  const int start = 2 * ((top + 15 + static_cast<int>(std::sqrt(40.0 * top))) / 2);
  const double tox = 2.0 / x;
  double bjp = 0.0;
  double bj = 1.0;
  double ans = 0.0;
  double sum = 0.0;
  bool even = false;
  for (int j = start; j > 0; --j) {
    const double bjm = j * tox * bj - bjp;
    bjp = bj;
    bj = bjm;
    if (std::abs(bj) > kBig) {
      bj *= kSmall;
      bjp *= kSmall;
      ans *= kSmall;
      sum *= kSmall;
    }
    if (even) sum += bj;
    even = !even;
    if (j == nu) ans = bjp;
  }
  sum = 2.0 * sum - bj;
  if (nu == 0) ans = bj;
  return ans / sum;
}

// I_nu(x), nu >= 0, by the ascending series (all terms positive).
double bessel_i_series(int nu, double x) {
  const double y = 0.25 * x * x;
  double sum = 1.0;
  double term = 1.0;
  for (int j = 1; j < 2000; ++j) {
    term *= y / (static_cast<double>(j) * static_cast<double>(nu + j));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  const double log_pref = nu * std::log(0.5 * x) - log_factorial(nu);
  return std::exp(log_pref) * sum;
}

// I_nu(x) e^{-x}, nu >= 0, x > 0, normalized by I_0 + 2 sum I_k = e^x.
double bessel_i_miller_scaled(int nu, double x) {
  constexpr double kBig = 1e250;
  constexpr double kSmall = 1e-250;
  const int start =
      2 * ((nu + 20 + static_cast<int>(10.0 * std::sqrt(std::max(x, 1.0)))) / 2) + 2;
  const double tox = 2.0 / x;
  double bip = 0.0;
  double bi = 1.0;
  double ans = 0.0;
  double sum = 0.0;
  for (int j = start; j > 0; --j) {
    const double bim = j * tox * bi + bip;
    bip = bi;
    bi = bim;
    if (bi > kBig) {
      bi *= kSmall;
      bip *= kSmall;
      ans *= kSmall;
      sum *= kSmall;
    }
    sum += bip;  // I_j for j >= 1
    if (j == nu) ans = bip;
  }
  sum = 2.0 * sum + bi;
  if (nu == 0) ans = bi;
  return ans / sum;
}

bool i_series_preferred(int nu, double x) { return x <= 30.0 || x * x <= 4.0 * (nu + 1); }

}  // namespace

double log_factorial(int n) {
  require_order(n, "log_factorial");
  if (n <= 20) return small_log_factorials()[static_cast<std::size_t>(n)];
  // ln Gamma(x), x = n + 1 >= 22; the first omitted term is below 1e-18.
  const double x = n + 1.0;
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12.0 -
             inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 / 1188.0))));
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series;
}

std::vector<double> kummer_phi_sequence(int n_max, int b, double x) {
  require_order(n_max, "kummer_phi");
  if (b < 1) {
    throw std::domain_error("kummer_phi: second parameter must be >= 1, got " +
                            std::to_string(b));
  }
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = 1.0;
  if (n_max == 0) return out;
  out[1] = 1.0 - x / b;
  for (int n = 1; n < n_max; ++n) {
    out[n + 1] = ((b + 2.0 * n - x) * out[n] - n * out[n - 1]) / (n + b);
  }
  return out;
}

double kummer_phi(int n, int b, double x) {
  require_order(n, "kummer_phi");
  if (b < 1) {
    throw std::domain_error("kummer_phi: second parameter must be >= 1, got " +
                            std::to_string(b));
  }
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 - x / b;
  for (int j = 1; j < n; ++j) {
    const double next = ((b + 2.0 * j - x) * cur - j * prev) / (j + b);
    prev = cur;
    cur = next;
  }
  return cur;
}

double hyp2f0_poly(int m, int n, double x) {
  require_order(m, "hyp2f0_poly");
  require_order(n, "hyp2f0_poly");
  // Canonical argument order makes the result symmetric bit for bit.
  if (m > n) std::swap(m, n);
  using detail::DoubleDouble;
  std::vector<DoubleDouble> coeff(static_cast<std::size_t>(m) + 1);
  coeff[0] = {1.0, 0.0};
  for (int j = 0; j < m; ++j) {
    // (-m+j)(-n+j) = (m-j)(n-j), exact as a double for the sizes in use.
    const double num = static_cast<double>(m - j) * static_cast<double>(n - j);
    coeff[j + 1] = (coeff[j] * num) / static_cast<double>(j + 1);
  }
  DoubleDouble acc = coeff[m];
  for (int j = m - 1; j >= 0; --j) {
    acc = acc * x + coeff[j];
  }
  return acc.value();
}

std::vector<double> laguerre_sequence(int n_max, int k, double x) {
  require_order(n_max, "laguerre");
  require_order(k, "laguerre");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = 1.0;
  if (n_max == 0) return out;
  out[1] = 1.0 + k - x;
  for (int n = 1; n < n_max; ++n) {
    out[n + 1] = ((2.0 * n + 1.0 + k - x) * out[n] - (n + k) * out[n - 1]) / (n + 1.0);
  }
  return out;
}

double laguerre(int n, int k, double x) {
  require_order(n, "laguerre");
  require_order(k, "laguerre");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + k - x;
  for (int j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double bessel_j(int nu, double x) {
  double sign = 1.0;
  if (nu < 0) {
    nu = -nu;
    if (nu % 2 != 0) sign = -sign;
  }
  if (x < 0.0) {
    x = -x;
    if (nu % 2 != 0) sign = -sign;
  }
  if (x == 0.0) return nu == 0 ? sign : 0.0;
  const bool series = x <= 2.0 || x * x <= nu + 1.0;
  return sign * (series ? bessel_j_series(nu, x) : bessel_j_miller(nu, x));
}

double bessel_i_exp_scaled(int nu, double x) {
  if (x < 0.0) throw std::domain_error("bessel_i: negative argument");
  nu = std::abs(nu);
  if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
  if (i_series_preferred(nu, x) && x <= 500.0) return bessel_i_series(nu, x) * std::exp(-x);
  return bessel_i_miller_scaled(nu, x);
}

double bessel_i(int nu, double x) {
  if (x < 0.0) throw std::domain_error("bessel_i: negative argument");
  nu = std::abs(nu);
  if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
  if (i_series_preferred(nu, x) && x <= 500.0) return bessel_i_series(nu, x);
  return bessel_i_miller_scaled(nu, x) * std::exp(x);
}

SpecValue bessel_i_scaled(int nu, double x) {
  if (x <= 500.0) return {bessel_i(nu, x), 0.0};
  return {bessel_i_exp_scaled(nu, x), x};
}

}  // namespace e2fock::specfun
