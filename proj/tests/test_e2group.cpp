#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"

#include "e2fock/e2group.hpp"
#include "e2fock/fock.hpp"
#include "e2fock/specfun.hpp"

using namespace e2fock;
using std::numbers::pi;

namespace {

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

// 3x3 matrix of (r, psi, phi) written out independently of GroupElement::matrix().
Eigen::Matrix3cd oracle_matrix(double r, double psi, double phi) {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(0, 0) = std::polar(1.0, phi);
  m(0, 2) = std::polar(r, psi);
  m(1, 1) = std::polar(1.0, -phi);
  m(1, 2) = std::polar(r, -psi);
  m(2, 2) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("canonical storage") {
  const GroupElement g(1.0, 3.0 * pi, -3.0 * pi);
  CHECK(g.psi() == doctest::Approx(pi));
  CHECK(g.phi() == doctest::Approx(pi));
  CHECK(GroupElement(0.0, 2.0, 0.1).psi() == 0.0);
  CHECK_THROWS_AS(GroupElement(-1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(GroupElement(1.0, NAN, 0.0), std::invalid_argument);
  const GroupElement t = GroupElement::from_translation(cplx(0.0, -2.0), 0.5);
  CHECK(t.r() == doctest::Approx(2.0));
  CHECK(t.psi() == doctest::Approx(-pi / 2));
}

TEST_CASE("composition and inverse match 3x3 matrix algebra") {
  const GroupElement g(1.3, 0.4, -0.9);
  const GroupElement h(0.6, -2.1, 2.5);
  CHECK(approx_equal(compose(g, GroupElement::identity()), g, 1e-15));
  CHECK(approx_equal(compose(g, inverse(g)), GroupElement::identity(), 1e-14));
  CHECK(approx_equal(compose(GroupElement(1, 0, 0), GroupElement(1, 0, 0)), GroupElement(2, 0, 0),
                     1e-15));
  const Eigen::Matrix3cd gh = oracle_matrix(1.3, 0.4, -0.9) * oracle_matrix(0.6, -2.1, 2.5);
  CHECK((compose(g, h).matrix() - gh).norm() <= 1e-14);
  CHECK((inverse(GroupElement(1, 0, pi / 2)).matrix() - oracle_matrix(1, 0, pi / 2).inverse()).norm() <=
        1e-14);
  const GroupElement gi = inverse(GroupElement(0.7, 0.3, 0.0));
  CHECK(gi.r() == doctest::Approx(0.7));
  CHECK(gi.psi() == doctest::Approx(0.3 - pi));
  CHECK(approx_equal(GroupElement::identity(), inverse(GroupElement::identity()), 0.0));
}

TEST_CASE("action on the generator") {
  const auto id = act_on_generator(GroupElement::identity());
  CHECK(id.alpha == cplx(1.0));
  CHECK(id.beta == cplx(0.0));
  const auto t = act_on_generator(GroupElement(2.0, 0.3, 0.0));
  CHECK(close(t.alpha, 1.0, 0.0));
  CHECK(close(t.beta, std::polar(2.0, 0.3), 1e-15));
  const auto g = act_on_generator(GroupElement(0.4, 1.0, 2.0));
  CHECK(std::abs(g.alpha) == doctest::Approx(1.0));
}

TEST_CASE("matrix elements: special values") {
  for (double r : {0.3, 1.0, 2.5}) {
    CHECK(close(u_matrix_element(GroupElement(r, 0.7, 0.2), 0, 0), std::exp(-r * r / 2), 1e-15));
  }
  const GroupElement rot(0.0, 0.0, 0.8);
  for (int m = 0; m < 6; ++m)
    for (int n = 0; n < 6; ++n) {
      const cplx expect = m == n ? std::polar(1.0, -n * 0.8) : cplx(0.0);
      CHECK(close(u_matrix_element(rot, m, n), expect, 1e-15));
    }
  CHECK(std::abs(u_matrix_element(GroupElement(1, 0, 0), 1, 1)) <= 1e-16);
}

TEST_CASE("matrix elements: frozen high-precision values") {
  const GroupElement g(1.3, 0.4, -0.9);
  CHECK(close(u_matrix_element(g, 7, 3), cplx(-0.016945173124922428191, 0.36796634381105612407), 1e-14));
  CHECK(close(u_matrix_element(g, 3, 7), cplx(0.16708499225835147371, 0.3282818521209123783), 1e-14));
  CHECK(close(u_matrix_element(GroupElement(2, 0, 0), 20, 20), cplx(-0.020407400631852478826, 0), 1e-14));
  CHECK(close(u_matrix_element(GroupElement(0.5, 1, 2), 0, 5),
              cplx(0.00071412466443296289518, 0.0024141091444464384335), 1e-16));
}

TEST_CASE("matrix elements: Kummer route matches the direct 2F0 route") {
  for (double r : {0.25, 0.7, 1.0, 2.0, 4.0}) {
    const GroupElement g(r, -1.2, 0.6);
    for (int m = 0; m <= 25; ++m)
      for (int n = 0; n <= 25; ++n) {
        const double mass = std::exp((n + m) * std::log(r) - 0.5 * r * r -
                                     0.5 * (specfun::log_factorial(n) + specfun::log_factorial(m))) *
                            specfun::hyp2f0_poly(m, n, 1.0 / (r * r));
        CHECK(std::abs(u_matrix_element(g, m, n) - u_matrix_element_hyp2f0(g, m, n)) <= 1e-10 * mass);
      }
  }
}

TEST_CASE("u_matrix assembles the elements") {
  const GroupElement g(1.1, 0.3, -0.4);
  const FockMatrix u = u_matrix(g, 12);
  for (int m = 0; m < 12; ++m)
    for (int n = 0; n < 12; ++n) CHECK(close(u(m, n), u_matrix_element(g, m, n), 1e-14));
  CHECK(u_matrix(GroupElement::identity(), 7).isIdentity(0.0));
  CHECK_THROWS_AS(u_matrix(g, 1), std::invalid_argument);
  const FockMatrix big = u_matrix(g, 64);
  CHECK((big.col(0) - fock::displaced_vacuum(g, 64)).norm() <= 1e-10);
}

TEST_CASE("unitarity and intertwining on the safe block") {
  for (double r : {0.5, 1.0, 2.0}) {
    const GroupElement g(r, 0.9, -0.2);
    const int dim = 64;
    const int s = fock::safe_block(r, dim);
    const FockMatrix u = u_matrix(g, dim);
    CHECK(fock::block_norm(u.adjoint() * u - FockMatrix::Identity(dim, dim), s) <= 1e-8);
    const auto act = act_on_generator(g);
    const FockMatrix z = fock::annihilator(dim);
    const FockMatrix lhs = u * z * u.adjoint();
    CHECK(fock::block_norm(lhs - act.alpha * z - act.beta * FockMatrix::Identity(dim, dim), s) <= 1e-8);
  }
}

TEST_CASE("U reverses the order of the matrix product up to a phase") {
  const int dim = 64;
  const GroupElement g1(0.8, 0.5, 1.0);
  const GroupElement g2(0.6, -1.4, 0.3);
  const FockMatrix a = u_matrix(g1, dim) * u_matrix(g2, dim);
  const int s = fock::safe_block(g1.r() + g2.r(), dim);
  for (const auto& [h, expect_ok] : {std::pair{compose(g2, g1), true}, std::pair{compose(g1, g2), false}}) {
    const FockMatrix b = u_matrix(h, dim);
    const cplx phase = a(0, 0) / b(0, 0);
    CHECK(std::abs(std::abs(phase) - 1.0) < (expect_ok ? 1e-12 : 1.0));
    const double err = fock::block_norm(a - phase * b, s);
    if (expect_ok) {
      CHECK(err <= 1e-8);
    } else {
      CHECK(err > 1e-2);
    }
  }
}

TEST_CASE("irrep elements") {
  const IrrepLabel l(2.0, 1);
  CHECK(close(irrep_element(l, 1, GroupElement::identity()), 1.0, 0.0));
  CHECK(close(irrep_element(l, 3, GroupElement::identity()), 0.0, 0.0));
  CHECK(close(irrep_element(IrrepLabel(1.5, 0), 0, GroupElement(2.0, 0.7, 0.0)),
              specfun::bessel_j(0, 3.0), 1e-15));
  CHECK(i_pow(0) == cplx(1));
  CHECK(i_pow(-1) == cplx(0, -1));
  CHECK(i_pow(6) == cplx(-1));
  CHECK_THROWS_AS(IrrepLabel(0.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(IrrepLabel(-1.0, 0), std::invalid_argument);

  // Row sums of |t|^2 and the homomorphism property.
  const GroupElement g(1.3, 0.4, -0.9);
  const GroupElement h(0.7, 2.0, 1.1);
  for (int k : {-3, 0, 2}) {
    const IrrepLabel row(2.5, k);
    double sum = 0.0;
    for (int n = k - 60; n <= k + 60; ++n) sum += std::norm(irrep_element(row, n, g));
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    for (int n : {-2, 1, 4}) {
      cplx acc = 0.0;
      for (int j = -80; j <= 80; ++j) {
        acc += irrep_element(row, j, g) * irrep_element(IrrepLabel(2.5, j), n, h);
      }
      CHECK(close(acc, irrep_element(row, n, compose(g, h)), 1e-13));
    }
  }
}
