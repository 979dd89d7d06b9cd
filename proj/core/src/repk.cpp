#include "e2fock/repk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "e2fock/specfun.hpp"

namespace e2fock {

namespace {

using Coefficients = AlgebraFunction::Coefficients;

cplx at(const Coefficients& f, int zeta) {
  if (zeta < 0 || zeta >= static_cast<int>(f.size())) return {0.0, 0.0};
  return f[static_cast<std::size_t>(zeta)];
}

// (zeta + m)! / zeta! as a product; exact for the small integers used in tests.
double rising_weight(int zeta, int m) {
  double w = 1.0;
  for (int i = 1; i <= m; ++i) w *= static_cast<double>(zeta + i);
  return w;
}

void accumulate(AlgebraFunction::Terms& out, int winding, const Coefficients& add) {
  Coefficients& dst = out[winding];
  if (dst.size() < add.size()) dst.resize(add.size());
  for (std::size_t i = 0; i < add.size(); ++i) dst[i] += add[i];
}

AlgebraFunction from_terms(AlgebraFunction::Terms&& terms) {
  AlgebraFunction out;
  for (auto& [w, c] : terms) out.set_term(w, std::move(c));
  return out;
}

// 2(n f(zeta) + zeta (f(zeta) - f(zeta-1))), support grows by one.
Coefficients lowering_stencil(const Coefficients& f, int n) {
  const int len = static_cast<int>(f.size());
  Coefficients g(static_cast<std::size_t>(len) + 1);
  for (int z = 0; z <= len; ++z) {
    g[z] = 2.0 * (static_cast<double>(n) * at(f, z) +
                  static_cast<double>(z) * (at(f, z) - at(f, z - 1)));
  }
  return g;
}

// 2(f(zeta+1) - f(zeta)).
Coefficients forward_difference(const Coefficients& f) {
  const int len = static_cast<int>(f.size());
  Coefficients g(static_cast<std::size_t>(len));
  for (int z = 0; z < len; ++z) g[z] = 2.0 * (at(f, z + 1) - at(f, z));
  return g;
}

}  // namespace

AlgebraFunction AlgebraFunction::monomial(int winding, Coefficients radial) {
  AlgebraFunction f;
  f.set_term(winding, std::move(radial));
  return f;
}

void AlgebraFunction::set_term(int winding, Coefficients radial) {
  for (const cplx& c : radial) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("AlgebraFunction: non-finite coefficient");
    }
  }
  if (radial.empty()) {
    terms_.erase(winding);
  } else {
    terms_[winding] = std::move(radial);
  }
}

const AlgebraFunction::Coefficients* AlgebraFunction::term(int winding) const {
  const auto it = terms_.find(winding);
  return it == terms_.end() ? nullptr : &it->second;
}

cplx AlgebraFunction::coefficient(int winding, int zeta) const {
  const Coefficients* t = term(winding);
  return t ? at(*t, zeta) : cplx{0.0, 0.0};
}

int AlgebraFunction::zmax() const {
  int z = -1;
  for (const auto& [w, c] : terms_) z = std::max(z, static_cast<int>(c.size()) - 1);
  return z;
}

int AlgebraFunction::max_winding() const {
  int m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, std::abs(w));
  return m;
}

AlgebraFunction AlgebraFunction::adjoint() const {
  AlgebraFunction out;
  for (const auto& [w, c] : terms_) {
    Coefficients conj(c.size());
    std::transform(c.begin(), c.end(), conj.begin(), [](cplx v) { return std::conj(v); });
    out.terms_[-w] = std::move(conj);
  }
  return out;
}

AlgebraFunction& AlgebraFunction::operator+=(const AlgebraFunction& other) {
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, c);
  return *this;
}

AlgebraFunction& AlgebraFunction::operator-=(const AlgebraFunction& other) {
  for (const auto& [w, c] : other.terms_) {
    Coefficients neg(c.size());
    std::transform(c.begin(), c.end(), neg.begin(), [](cplx v) { return -v; });
    accumulate(terms_, w, neg);
  }
  return *this;
}

AlgebraFunction& AlgebraFunction::operator*=(cplx s) {
  for (auto& [w, c] : terms_) {
    for (cplx& v : c) v *= s;
  }
  return *this;
}

double max_abs(const AlgebraFunction& f) {
  double m = 0.0;
  for (const auto& [w, c] : f.terms()) {
    for (const cplx& v : c) m = std::max(m, std::abs(v));
  }
  return m;
}

cplx inner_product(const AlgebraFunction& f, const AlgebraFunction& g) {
  cplx total{0.0, 0.0};
  for (const auto& [w, fc] : f.terms()) {
    const Coefficients* gc = g.term(w);
    if (!gc) continue;
    const int m = std::abs(w);
    const std::size_t len = std::min(fc.size(), gc->size());
    for (std::size_t z = 0; z < len; ++z) {
      total += std::conj(fc[z]) * (*gc)[z] * rising_weight(static_cast<int>(z), m);
    }
  }
  return total;
}

double hs_norm(const AlgebraFunction& f) { return std::sqrt(std::max(0.0, inner_product(f, f).real())); }

FockMatrix to_matrix(const AlgebraFunction& f, int dim) {
  if (dim < 2) throw std::invalid_argument("to_matrix: dim must be >= 2");
  FockMatrix out = FockMatrix::Zero(dim, dim);
  for (const auto& [w, c] : f.terms()) {
    const int m = std::abs(w);
    const int len = static_cast<int>(c.size());
    if (len + m > dim) {
      throw std::invalid_argument("to_matrix: support zeta <= " + std::to_string(len - 1) +
                                  " at winding " + std::to_string(w) +
                                  " does not fit in dim " + std::to_string(dim));
    }
    for (int z = 0; z < len; ++z) {
      const double s = std::sqrt(rising_weight(z, m));
      if (w >= 0) {
        out(z, z + m) += c[z] * s;  // f(zeta) z^m
      } else {
        out(z + m, z) += s * c[z];  // z*^m f(zeta)
      }
    }
  }
  return out;
}

AlgebraFunction op_p(const AlgebraFunction& f) {
  AlgebraFunction::Terms out;
  for (const auto& [w, c] : f.terms()) {
    if (w >= 1) {
      accumulate(out, w - 1, lowering_stencil(c, w));
    } else {
      accumulate(out, w - 1, forward_difference(c));
    }
  }
  return from_terms(std::move(out));
}

AlgebraFunction op_pbar(const AlgebraFunction& f) {
  AlgebraFunction::Terms out;
  for (const auto& [w, c] : f.terms()) {
    if (w <= -1) {
      accumulate(out, w + 1, lowering_stencil(c, -w));
    } else {
      accumulate(out, w + 1, forward_difference(c));
    }
  }
  return from_terms(std::move(out));
}

AlgebraFunction op_h(const AlgebraFunction& f) {
  AlgebraFunction out;
  for (const auto& [w, c] : f.terms()) {
    Coefficients g(c.size());
    const double k = -static_cast<double>(w);
    std::transform(c.begin(), c.end(), g.begin(), [k](cplx v) { return k * v; });
    out.set_term(w, std::move(g));
  }
  return out;
}

AlgebraFunction adjoint_p(const AlgebraFunction& f) { return cplx{-1.0, 0.0} * op_pbar(f); }

AlgebraFunction generator(Subgroup s, const AlgebraFunction& f) {
  switch (s) {
    case Subgroup::translation_real:
      return cplx{0.5, 0.0} * (op_p(f) + op_pbar(f));
    case Subgroup::translation_imag:
      return cplx{0.0, 0.5} * (op_p(f) - op_pbar(f));
    case Subgroup::rotation:
      return cplx{0.0, -1.0} * op_h(f);
  }
  throw std::invalid_argument("generator: unknown subgroup");
}

GroupElement subgroup_element(Subgroup s, double eps) {
  switch (s) {
    case Subgroup::translation_real:
      return GroupElement::from_translation({eps, 0.0}, 0.0);
    case Subgroup::translation_imag:
      return GroupElement::from_translation({0.0, eps}, 0.0);
    case Subgroup::rotation:
      return {0.0, 0.0, eps};
  }
  throw std::invalid_argument("subgroup_element: unknown subgroup");
}

std::vector<cplx> basis_radial(double lambda, int k, int zmax) {
  const int kk = std::abs(k);
  const double log_pref = kk * std::log(0.5 * lambda) - specfun::log_factorial(kk) -
                          lambda * lambda / 8.0;
  const cplx pref = i_pow(kk) * std::exp(log_pref);
  const std::vector<double> phi = specfun::kummer_phi_sequence(zmax, 1 + kk, lambda * lambda / 4.0);
  std::vector<cplx> f(phi.size());
  for (std::size_t z = 0; z < phi.size(); ++z) f[z] = pref * phi[z];
  return f;
}

std::vector<cplx> basis_radial_laguerre(double lambda, int k, int zmax) {
  const int kk = std::abs(k);
  const double x = lambda * lambda / 4.0;
  const std::vector<double> lag = specfun::laguerre_sequence(zmax, kk, x);
  std::vector<cplx> f(lag.size());
  for (int z = 0; z <= zmax; ++z) {
    const double log_mod = kk * std::log(0.5 * lambda) - lambda * lambda / 8.0 +
                           specfun::log_factorial(z) - specfun::log_factorial(kk + z);
    f[z] = i_pow(kk) * std::exp(log_mod) * lag[z];
  }
  return f;
}

BasisFunction basis_d(const IrrepLabel& label, int zmax) {
  if (zmax < 1) throw std::invalid_argument("basis_d: zmax must be >= 1");
  const int k = label.k();
  // k >= 0: z*^k f  (winding -k);  k < 0: f z^|k|  (winding |k|).
  return {label, AlgebraFunction::monomial(-k, basis_radial(label.lambda(), k, zmax))};
}

double radial_recurrence_residual(const std::vector<cplx>& f, double lambda, int k, int zeta) {
  const int kk = std::abs(k);
  if (zeta < 0 || zeta + 1 >= static_cast<int>(f.size())) {
    throw std::out_of_range("radial_recurrence_residual: zeta outside interior");
  }
  const cplx t1 = static_cast<double>(kk + 1 + zeta) * f[zeta + 1];
  const cplx t2 = (lambda * lambda / 4.0 - 2.0 * zeta - kk - 1.0) * f[zeta];
  const cplx t3 = zeta > 0 ? static_cast<double>(zeta) * f[zeta - 1] : cplx{0.0, 0.0};
  // The eigenvalue part and the stencil part of the middle coefficient are
  // scaled separately; at lambda^2/4 = 2 zeta + k + 1 they cancel exactly.
  const double scale = std::max({std::abs(t1), lambda * lambda / 4.0 * std::abs(f[zeta]),
                                 (2.0 * zeta + kk + 1.0) * std::abs(f[zeta]), std::abs(t3)});
  return scale == 0.0 ? 0.0 : std::abs(t1 + t2 + t3) / scale;
}

std::vector<double> casimir_residual_profile(const AlgebraFunction& f, double lambda,
                                             bool p_first) {
  if (f.terms().size() != 1) {
    throw std::invalid_argument("casimir_residual_profile: expects a single winding");
  }
  const int w = f.terms().begin()->first;
  const Coefficients& c = f.terms().begin()->second;
  const int kk = std::abs(w);
  const AlgebraFunction applied = p_first ? op_p(adjoint_p(f)) : adjoint_p(op_p(f));
  const double l2 = lambda * lambda;
  std::vector<double> out;
  const int len = static_cast<int>(c.size());
  for (int z = 0; z + 1 < len; ++z) {
    const cplx res = applied.coefficient(w, z) - l2 * at(c, z);
    const double scale = l2 * std::abs(at(c, z)) +
                         4.0 * (static_cast<double>(kk + 1 + z) * std::abs(at(c, z + 1)) +
                                static_cast<double>(2 * z + kk + 1) * std::abs(at(c, z)) +
                                static_cast<double>(z) * std::abs(at(c, z - 1)));
    out.push_back(scale == 0.0 ? 0.0 : std::abs(res) / scale);
  }
  return out;
}

EigenResiduals eigen_residuals(const IrrepLabel& label, int zmax) {
  const BasisFunction d = basis_d(label, zmax);
  EigenResiduals out;
  for (double v : casimir_residual_profile(d.function, label.lambda(), true)) {
    out.casimir = std::max(out.casimir, v);
  }
  for (double v : casimir_residual_profile(d.function, label.lambda(), false)) {
    out.casimir_alt = std::max(out.casimir_alt, v);
  }
  const AlgebraFunction hd = op_h(d.function);
  const AlgebraFunction kd = cplx(static_cast<double>(label.k()), 0.0) * d.function;
  out.grading = max_abs(hd - kd);
  return out;
}

FockMatrix act_T(const GroupElement& g, const AlgebraFunction& f, int dim) {
  const FockMatrix u = u_matrix(g, dim);
  return u * to_matrix(f, dim) * u.adjoint();
}

double difference_quotient_error(Subgroup s, const AlgebraFunction& f, double eps, int dim) {
  const GroupElement g = subgroup_element(s, eps);
  const FockMatrix base = to_matrix(f, dim);
  const FockMatrix quotient = (act_T(g, f, dim) - base) / eps;
  const FockMatrix exact = to_matrix(generator(s, f), dim);
  const int block = fock::safe_block(eps, dim);
  return (quotient - exact).topLeftCorner(block, block).cwiseAbs().maxCoeff();
}

}  // namespace e2fock
