#include "doctest.h"

#include "e2fock/e2group.hpp"
#include "e2fock/fock.hpp"
#include "e2fock/specfun.hpp"
#include "oracles.hpp"

using namespace e2fock;

TEST_CASE("u_matrix equals the matrix-exponential oracle up to a global phase") {
  const int dim = 64;
  for (double r : {0.1, 0.5, 1.0, 1.5})
    for (double psi : {0.0, 0.7, -2.4})
      for (double phi : {0.0, 0.3, 3.0}) {
        const GroupElement g(r, psi, phi);
        const int s = fock::safe_block(r, dim);
        CHECK(oracle::phase_matched_error(u_matrix(g, dim), oracle::displacement_rotation(g, dim), s) <=
              1e-8);
      }
}

TEST_CASE("the oracle is not blind to a wrong sign convention") {
  const int dim = 32;
  const GroupElement g(1.0, 0.7, 0.3);
  const GroupElement flipped(1.0, 0.7 + M_PI, 0.3);
  const int s = fock::safe_block(1.0, dim);
  CHECK(oracle::phase_matched_error(u_matrix(g, dim), oracle::displacement_rotation(flipped, dim), s) >
        1e-2);
}

TEST_CASE("Bessel J against trapezoid quadrature of the integral representation") {
  for (int n : {0, 1, 4, 17, 40})
    for (double x : {0.3, 2.0, 9.5, 33.0}) {
      CHECK(std::abs(specfun::bessel_j(n, x) - oracle::bessel_j_quadrature(n, x)) <= 1e-14);
    }
}
