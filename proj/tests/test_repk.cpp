#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "e2fock/fock.hpp"
#include "e2fock/repk.hpp"
#include "e2fock/specfun.hpp"

using namespace e2fock;

namespace {

AlgebraFunction random_function(std::mt19937_64& rng, int terms, int max_winding, int zmax) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> wd(-max_winding, max_winding);
  std::uniform_int_distribution<int> ld(1, zmax + 1);
  AlgebraFunction f;
  for (int t = 0; t < terms; ++t) {
    std::vector<cplx> c(ld(rng));
    for (auto& v : c) v = cplx(u(rng), u(rng));
    f += AlgebraFunction::monomial(wd(rng), std::move(c));
  }
  return f;
}

double max_entry(const FockMatrix& m, int block) {
  return m.topLeftCorner(block, block).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("AlgebraFunction storage") {
  AlgebraFunction f;
  CHECK(f.empty());
  CHECK(f.zmax() == -1);
  f.set_term(2, {1.0, 2.0});
  f.set_term(-3, {cplx(0, 1)});
  CHECK(f.coefficient(2, 1) == cplx(2.0));
  CHECK(f.coefficient(2, 7) == cplx(0.0));
  CHECK(f.coefficient(5, 0) == cplx(0.0));
  CHECK(f.term(4) == nullptr);
  CHECK(f.zmax() == 1);
  CHECK(f.max_winding() == 3);
  f.set_term(2, {});
  CHECK(f.term(2) == nullptr);
  CHECK_THROWS_AS(f.set_term(0, {NAN}), std::invalid_argument);
  const AlgebraFunction g = f.adjoint();
  CHECK(g.coefficient(3, 0) == cplx(0, -1));
}

TEST_CASE("inner product: closed form against the matrix trace") {
  AlgebraFunction one = AlgebraFunction::monomial(0, {1.0});
  CHECK(inner_product(one, one) == cplx(1.0));
  CHECK(inner_product(AlgebraFunction::monomial(1, {1.0}), AlgebraFunction::monomial(-1, {1.0})) ==
        cplx(0.0));
  const int zmax = 12;
  const AlgebraFunction zstar = AlgebraFunction::monomial(-1, std::vector<cplx>(zmax + 1, 1.0));
  CHECK(inner_product(zstar, zstar).real() == doctest::Approx((zmax + 1) * (zmax + 2) / 2.0));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const AlgebraFunction f = random_function(rng, 6, 3, 15);
    const AlgebraFunction g = random_function(rng, 6, 3, 15);
    const cplx trace = (to_matrix(f, 40).adjoint() * to_matrix(g, 40)).trace();
    CHECK(std::abs(inner_product(f, g) - trace) <= 1e-12 * hs_norm(f) * hs_norm(g));
  }
}

TEST_CASE("to_matrix conventions") {
  const int dim = 6;
  CHECK(to_matrix(AlgebraFunction::monomial(0, std::vector<cplx>(dim, 1.0)), dim).isIdentity(0.0));
  const FockMatrix e01 = to_matrix(AlgebraFunction::monomial(1, {1.0}), dim);
  CHECK(e01(0, 1) == cplx(1.0));
  CHECK(e01.cwiseAbs().sum() == 1.0);
  // f = 1 at winding 1 is the annihilator, at winding -1 the creator.
  CHECK((to_matrix(AlgebraFunction::monomial(1, std::vector<cplx>(dim - 1, 1.0)), dim) -
         fock::annihilator(dim))
            .norm() <= 1e-15);
  CHECK((to_matrix(AlgebraFunction::monomial(-1, std::vector<cplx>(dim - 1, 1.0)), dim) -
         fock::creator(dim))
            .norm() <= 1e-15);
  std::mt19937_64 rng(11);
  const AlgebraFunction f = random_function(rng, 5, 2, 6);
  CHECK((to_matrix(f.adjoint(), 12) - to_matrix(f, 12).adjoint()).norm() <= 1e-15);
  CHECK_THROWS_AS(to_matrix(AlgebraFunction::monomial(3, std::vector<cplx>(5, 1.0)), 7),
                  std::invalid_argument);
}

TEST_CASE("generators against truncated matrix commutators") {
  const int dim = 40;
  const FockMatrix z = fock::annihilator(dim);
  const FockMatrix zs = fock::creator(dim);
  const FockMatrix zeta = fock::number_op(dim);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    const AlgebraFunction f = random_function(rng, 5, 3, 12);
    const FockMatrix m = to_matrix(f, dim);
    const int block = dim - 8;
    CHECK(max_entry(to_matrix(op_p(f), dim) - 2.0 * (m * zs - zs * m), block) <= 1e-13);
    CHECK(max_entry(to_matrix(op_pbar(f), dim) - 2.0 * (z * m - m * z), block) <= 1e-13);
    CHECK(max_entry(to_matrix(op_h(f), dim) - (zeta * m - m * zeta), block) <= 1e-13);
  }
}

TEST_CASE("p on f(zeta) z^n lowers the winding with a backward difference") {
  // F = |0><1| is f = delta_0 at winding 1; p F = 2[F, z*] = 2(|0><0| - |1><1|).
  const AlgebraFunction f = AlgebraFunction::monomial(1, {1.0});
  const AlgebraFunction pf = op_p(f);
  CHECK(pf.coefficient(0, 0) == cplx(2.0));
  CHECK(pf.coefficient(0, 1) == cplx(-2.0));
  // General form 2(n f(zeta) + zeta (f(zeta) - f(zeta-1))) z^{n-1}.
  const std::vector<cplx> c{0.3, -1.2, 0.8, 2.0};
  const int n = 3;
  const AlgebraFunction g = op_p(AlgebraFunction::monomial(n, c));
  for (int zeta = 0; zeta <= 4; ++zeta) {
    const cplx fz = zeta < 4 ? c[zeta] : 0.0;
    const cplx fm = (zeta >= 1 && zeta - 1 < 4) ? c[zeta - 1] : 0.0;
    CHECK(std::abs(g.coefficient(n - 1, zeta) - 2.0 * (double(n) * fz + double(zeta) * (fz - fm))) <=
          1e-15);
  }
  CHECK(op_p(AlgebraFunction::monomial(0, std::vector<cplx>(30, 1.0))).coefficient(-1, 5) == cplx(0.0));
}

TEST_CASE("h grades by winding") {
  for (int k = -5; k <= 5; ++k) {
    const AlgebraFunction d = basis_d(IrrepLabel(1.7, k), 20).function;
    CHECK(max_abs(op_h(d) - cplx(double(k)) * d) == 0.0);
  }
  // z*^k terms have eigenvalue +k.
  const AlgebraFunction zs2 = AlgebraFunction::monomial(-2, {1.0, 1.0});
  CHECK(op_h(zs2).coefficient(-2, 0) == cplx(2.0));
}

TEST_CASE("adjoint relations under the trace inner product") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    const AlgebraFunction f = random_function(rng, 5, 2, 20);
    const AlgebraFunction g = random_function(rng, 5, 2, 20);
    const double scale = (hs_norm(op_p(f)) + hs_norm(f)) * (hs_norm(g) + hs_norm(adjoint_p(g)));
    CHECK(std::abs(inner_product(op_p(f), g) - inner_product(f, adjoint_p(g))) <= 1e-10 * scale);
    CHECK(std::abs(inner_product(op_h(f), g) - inner_product(f, op_h(g))) <=
          1e-12 * hs_norm(op_h(f)) * hs_norm(g) + 1e-12 * hs_norm(f) * hs_norm(op_h(g)));
  }
  CHECK(adjoint_p(AlgebraFunction::monomial(0, std::vector<cplx>(10, 1.0))).coefficient(1, 3) == cplx(0.0));
}

TEST_CASE("p and pbar commute") {
  std::mt19937_64 rng(5);
  const AlgebraFunction f = random_function(rng, 6, 3, 10);
  CHECK(max_abs(op_p(op_pbar(f)) - op_pbar(op_p(f))) <= 1e-12);
}

TEST_CASE("basis radial values") {
  for (double lambda : {0.5, 2.0, 6.0}) {
    CHECK(basis_radial(lambda, 0, 5)[0].real() == doctest::Approx(std::exp(-lambda * lambda / 8)));
  }
  // Laguerre route agrees with the Kummer route.
  for (double lambda : {0.5, 2.0, 8.0})
    for (int k : {0, 3, -7, 20}) {
      const auto a = basis_radial(lambda, k, 200);
      const auto b = basis_radial_laguerre(lambda, k, 200);
      double peak = 0.0;
      for (const auto& v : a) peak = std::max(peak, std::abs(v));
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(std::abs(a[i] - b[i]) <= 1e-11 * std::max(std::abs(a[i]), 1e-3 * peak));
      }
    }
  const auto f = basis_radial(2.0, 3, 30);
  CHECK(radial_recurrence_residual(f, 2.0, 3, 10) <= 1e-11);
  CHECK_THROWS_AS(radial_recurrence_residual(f, 2.0, 3, 30), std::out_of_range);
  CHECK_THROWS_AS(basis_d(IrrepLabel(1.0, 0), 0), std::invalid_argument);
  // k < 0 carries the same radial function on the opposite winding.
  const auto dp = basis_d(IrrepLabel(1.3, 2), 10).function;
  const auto dm = basis_d(IrrepLabel(1.3, -2), 10).function;
  CHECK(dp.term(-2) != nullptr);
  CHECK(dm.term(2) != nullptr);
  CHECK(std::abs(dm.coefficient(2, 4) - dp.coefficient(-2, 4)) <= 1e-15);
}

TEST_CASE("eigen equations") {
  const EigenResiduals r = eigen_residuals(IrrepLabel(1.0, 0), 100);
  CHECK(r.casimir <= 1e-10);
  CHECK(r.grading == 0.0);
  for (double lambda : {0.5, 4.0, 8.0})
    for (int k : {-20, -3, 0, 5, 20}) {
      const EigenResiduals e = eigen_residuals(IrrepLabel(lambda, k), 200);
      CHECK(e.casimir <= 1e-10);
      CHECK(e.casimir_alt <= 1e-10);
      CHECK(e.grading == 0.0);
    }
}

TEST_CASE("recurrence residual and Casimir residual agree within a factor 4") {
  // A slightly wrong weight makes both residuals nonzero.
  for (int k : {0, 2, -5}) {
    const double lambda = 2.0;
    const auto f = basis_radial(lambda * 1.01, k, 60);
    const auto profile =
        casimir_residual_profile(AlgebraFunction::monomial(-k, f), lambda, true);
    for (int zeta = 0; zeta + 1 < 60; ++zeta) {
      const double rec = radial_recurrence_residual(f, lambda, k, zeta);
      if (rec < 1e-12) continue;
      const double ratio = rec / profile[zeta];
      CHECK(ratio >= 0.25);
      CHECK(ratio <= 4.0);
    }
  }
}

TEST_CASE("T(g) acts by conjugation") {
  const int dim = 64;
  std::mt19937_64 rng(21);
  const AlgebraFunction f = random_function(rng, 4, 2, 5);
  CHECK((act_T(GroupElement::identity(), f, dim) - to_matrix(f, dim)).norm() <= 1e-14);
  const GroupElement g(0.9, 0.6, -0.4);
  const int s = fock::safe_block(g.r(), dim);
  const AlgebraFunction z = AlgebraFunction::monomial(1, std::vector<cplx>(dim - 1, 1.0));
  const FockMatrix expect = std::polar(1.0, g.phi()) * fock::annihilator(dim) +
                            g.translation() * FockMatrix::Identity(dim, dim);
  CHECK(max_entry(act_T(g, z, dim) - expect, s) <= 1e-10);
  for (double r : {0.3, 1.0}) {
    const FockMatrix t = act_T(GroupElement(r, 1.0, 0.2), f, dim);
    CHECK(std::abs(t.norm() - hs_norm(f)) <= 1e-8);
  }
}

TEST_CASE("difference quotients converge to the generators at first order") {
  const int dim = 64;
  std::mt19937_64 rng(8);
  const AlgebraFunction f = random_function(rng, 4, 2, 6);
  for (Subgroup s : {Subgroup::translation_real, Subgroup::translation_imag, Subgroup::rotation}) {
    const double e1 = difference_quotient_error(s, f, 1e-3, dim);
    const double e2 = difference_quotient_error(s, f, 1e-4, dim);
    CHECK(e2 < e1);
    CHECK(e1 / e2 == doctest::Approx(10.0).epsilon(0.2));
  }
  CHECK(approx_equal(subgroup_element(Subgroup::rotation, 0.1), GroupElement(0, 0, 0.1), 0.0));
}
