#include "e2fock/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "e2fock/e2group.hpp"
#include "e2fock/specfun.hpp"

namespace e2fock::fock {

namespace {

void require_dim(int dim) {
  if (dim < 2) {
    throw std::invalid_argument("Fock truncation dimension must be >= 2, got " +
                                std::to_string(dim));
  }
}

}  // namespace

FockMatrix annihilator(int dim) {
  require_dim(dim);
  FockMatrix a = FockMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

FockMatrix creator(int dim) { return annihilator(dim).adjoint(); }

FockMatrix number_op(int dim) {
  require_dim(dim);
  FockMatrix n = FockMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) n(i, i) = static_cast<double>(i);
  return n;
}

FockMatrix commutator(int dim) {
  const FockMatrix a = annihilator(dim);
  const FockMatrix ad = creator(dim);
  return a * ad - ad * a;
}

double commutator_defect(int dim, Block block) {
  const FockMatrix defect = commutator(dim) - FockMatrix::Identity(dim, dim);
  if (block == Block::full) return defect.norm();
  return defect.topLeftCorner(dim - 1, dim - 1).norm();
}

int safe_block(double r, int dim) {
  const double root = std::sqrt(static_cast<double>(dim)) - 1.25 * r - 1.5;
  if (root <= 1.0) return 1;
  return std::clamp(static_cast<int>(std::floor(root * root)), 1, dim);
}

int boundary_margin(double r, int dim) { return dim - safe_block(r, dim); }

double block_norm(const FockMatrix& m, int size) {
  return m.topLeftCorner(size, size).norm();
}

FockVector basis_vector(int dim, int n) {
  require_dim(dim);
  if (n < 0 || n >= dim) throw std::out_of_range("basis index outside truncation");
  FockVector e = FockVector::Zero(dim);
  e(n) = 1.0;
  return e;
}

double coherent_tail(double r, int dim) {
  if (r == 0.0) return 0.0;
  const double mu = r * r;
  const double log_mu = std::log(mu);
  double tail = 0.0;
  // Terms decrease once n > mu; stop when they no longer matter.
  for (int n = dim; n < dim + 100000; ++n) {
    const double term = std::exp(n * log_mu - specfun::log_factorial(n) - mu);
    tail += term;
    if (n > mu && term < 1e-30 * tail) break;
    if (n > mu && tail == 0.0) break;
  }
  return tail;
}

FockVector displaced_vacuum(const GroupElement& g, int dim) {
  require_dim(dim);
  const double tail = coherent_tail(g.r(), dim);
  if (tail > 1e-20) {
    throw std::domain_error("displaced_vacuum: truncation dim " + std::to_string(dim) +
                            " too small for r = " + std::to_string(g.r()) +
                            " (tail mass " + std::to_string(tail) + ")");
  }
  FockVector v = FockVector::Zero(dim);
  const double r = g.r();
  if (r == 0.0) {
    v(0) = 1.0;
    return v;
  }
  // c_n = e^{-r^2/2} (-r e^{i(psi-phi)})^n / sqrt(n!)
  const double base_phase = g.psi() - g.phi();
  for (int n = 0; n < dim; ++n) {
    const double log_mod =
        -0.5 * r * r + n * std::log(r) - 0.5 * specfun::log_factorial(n);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    v(n) = sign * std::polar(std::exp(log_mod), n * base_phase);
  }
  return v;
}

FockVector displaced_basis(const GroupElement& g, int dim, int n) {
  if (n < 0 || n + 4 >= dim) {
    throw std::invalid_argument("displaced_basis: index " + std::to_string(n) +
                                " too close to truncation dim " + std::to_string(dim));
  }
  FockVector v = displaced_vacuum(g, dim);
  const cplx rot = std::polar(1.0, -g.phi());
  const cplx shift = std::conj(g.translation());
  for (int j = 1; j <= n; ++j) {
    FockVector w = shift * v;
    for (int i = 1; i < dim; ++i) w(i) += rot * std::sqrt(static_cast<double>(i)) * v(i - 1);
    v = w / std::sqrt(static_cast<double>(j));
  }
  return v;
}

}  // namespace e2fock::fock
