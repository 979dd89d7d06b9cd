#pragma once

// Truncated Fock-space realization of the Heisenberg algebra [z, z*] = 1.
//
// Operators are dense complex matrices in the number basis {|0>, ..., |N-1>}.
// Truncation only corrupts entries near the last rows/columns, so statements
// about infinite-dimensional operators are asserted on a leading "safe block".

#include <Eigen/Dense>

#include <complex>

namespace e2fock {

class GroupElement;

using cplx = std::complex<double>;
using FockMatrix = Eigen::MatrixXcd;
using FockVector = Eigen::VectorXcd;

namespace fock {

/// z: entry (n-1, n) = sqrt(n). Throws std::invalid_argument for dim < 2.
FockMatrix annihilator(int dim);
/// z* = adjoint of annihilator(dim).
FockMatrix creator(int dim);
/// zeta = z* z = diag(0, 1, ..., dim-1).
FockMatrix number_op(int dim);

/// Truncated [z, z*] = z z* - z* z; differs from the identity only at (N-1, N-1).
FockMatrix commutator(int dim);

enum class Block { leading, full };

/// Frobenius norm of [z, z*] - I, either on the leading (dim-1) block (exactly 0)
/// or on the whole truncated matrix (equal to dim, all of it at the last entry).
double commutator_defect(int dim, Block block = Block::leading);

/// Leading block of U(g)-transformed operators that is unaffected by truncation.
///
/// A displacement by r keeps |n> essentially inside sqrt(m) in [sqrt(n) - r, sqrt(n) + r],
/// with an evanescent layer beyond. The block is floor((sqrt(dim) - 1.25 r - 1.5)^2),
/// never below 1; at dim = 64 this keeps truncation effects below 1e-10.
int safe_block(double r, int dim);

/// dim - safe_block(r, dim).
int boundary_margin(double r, int dim);

/// Frobenius norm of the leading size x size block.
double block_norm(const FockMatrix& m, int size);

/// Basis vector e_n of length dim.
FockVector basis_vector(int dim, int n);

/// Probability mass of Poisson(r^2) at n >= dim, i.e.
/// e^{-r^2} sum_{n >= dim} r^{2n}/n!, evaluated in log space.
double coherent_tail(double r, int dim);

/// |0>' = e^{-r^2/2} exp(-r e^{i(psi-phi)} z*) |0>, the vacuum of gz.
///
/// Throws std::domain_error if the dropped tail exceeds 1e-20 (dim too small for r).
FockVector displaced_vacuum(const GroupElement& g, int dim);

/// |n>' = (gz*)^n / sqrt(n!) |0>' with gz* = e^{-i phi} z* + r e^{-i psi}.
///
/// Throws std::invalid_argument unless 0 <= n and n + 4 < dim.
FockVector displaced_basis(const GroupElement& g, int dim, int n);

}  // namespace fock
}  // namespace e2fock
