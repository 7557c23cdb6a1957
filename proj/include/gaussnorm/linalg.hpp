#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace gaussnorm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Standard symplectic matrix J = [[0, -I], [I, 0]] in the coordinate order
/// (x_1..x_n, xi_1..xi_n), so that sigma(X, Y) = X . J Y.
RealMatrix symplectic_j(int n);

/// LU determinant with partial pivoting; exactly singular input gives 0.
Complex determinant(const ComplexMatrix& m);

/// Solves m x = rhs. Throws kSingularMatrix when a pivot falls below
/// kTol.pivot_rel times the largest entry of m.
ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& rhs);

struct SymEig {
  RealVector values;  // ascending
  RealMatrix vectors; // columns, orthonormal
};

/// Eigendecomposition of a real symmetric matrix. Throws kNotSymmetric.
SymEig sym_eig(const RealMatrix& m);

/// exp(m) by scaling and squaring with the [13/13] diagonal Pade approximant.
ComplexMatrix mat_exp(const ComplexMatrix& m);

struct MatTrig {
  ComplexMatrix cos;
  ComplexMatrix sin;
  ComplexMatrix tan;
};

/// cos, sin and tan of a square matrix through exp(+-i f). Throws
/// kSingularCosine when cos f cannot be inverted.
MatTrig mat_trig(const ComplexMatrix& f);

/// Largest singular value by power iteration on m* m. Throws kNoConvergence
/// (carrying the last estimate) if the relative change never drops below
/// rel_tol within max_iter iterations.
double spectral_norm(const ComplexMatrix& m, double rel_tol = 1e-10, int max_iter = 10000);

/// Symplectic eigenvalues s_1 <= ... <= s_n of a real symmetric positive
/// definite 2n x 2n matrix, i.e. Spec(J b) = {+-i s_j}. Throws
/// kNotPositiveDefinite.
std::vector<double> symplectic_eigenvalues(const RealMatrix& b);

/// max_ij |m_ij|
double max_abs(const ComplexMatrix& m);

/// 1/2 (m + m^T)
ComplexMatrix symmetrize(const ComplexMatrix& m);

}  // namespace gaussnorm
