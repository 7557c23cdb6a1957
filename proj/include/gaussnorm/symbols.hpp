#pragma once

#include "gaussnorm/linalg.hpp"

namespace gaussnorm {

/// Complex quadratic form q(Z) = 1/2 Z . H Z on R^{2n}, Z = (x, xi).
class QuadraticForm {
 public:
  /// Validates that hessian is 2n x 2n and symmetric to kTol.symmetry_rel;
  /// the stored Hessian is the symmetrized input.
  explicit QuadraticForm(const ComplexMatrix& hessian);

  /// The Davies symbol e^{i theta} x^2 + e^{-i theta} xi^2.
  static QuadraticForm davies(double theta);

  /// q = a x^2 + 2 b x xi + c xi^2 (n = 1).
  static QuadraticForm from_coefficients(Complex a, Complex b, Complex c);

  int n() const { return n_; }
  const ComplexMatrix& hessian() const { return hessian_; }
  Complex operator()(const ComplexVector& z) const;

 private:
  int n_;
  ComplexMatrix hessian_;
};

/// c exp(-1/2 Z . A Z). Flags are computed once at construction:
/// bounded <=> Re A positive semidefinite, integrable <=> Re A positive
/// definite, both with the relative band kTol.psd_rel.
class GaussianSymbol {
 public:
  GaussianSymbol(Complex prefactor, const ComplexMatrix& exponent);

  int n() const { return n_; }
  Complex prefactor() const { return prefactor_; }
  const ComplexMatrix& exponent() const { return exponent_; }
  bool integrable() const { return integrable_; }
  bool bounded() const { return bounded_; }

  Complex operator()(const ComplexVector& z) const;

 private:
  int n_;
  Complex prefactor_;
  ComplexMatrix exponent_;
  bool integrable_;
  bool bounded_;
};

/// Entries of K^{-1} = (a b; c d) for a 2x2 linear canonical map.
struct CanonicalMap2x2 {
  Complex a, b, c, d;

  /// Throws kInvalidArgument unless ad - bc = 1 within 1e-12.
  static CanonicalMap2x2 make(Complex a, Complex b, Complex c, Complex d);
  bool is_real(double tol = 1e-14) const;
};

/// K1 o K2, stored as (K1 K2)^{-1} = K2^{-1} K1^{-1}.
CanonicalMap2x2 compose(const CanonicalMap2x2& k1, const CanonicalMap2x2& k2);

/// The complex canonical map of the Davies FBI-Bargmann transform,
/// (1/sqrt 2) (1, i e^{i theta}; i e^{-i theta}, 1). At theta = 0 its Moebius
/// action is the Cayley transform (gamma - 1) / (gamma + 1).
CanonicalMap2x2 bargmann_map(double theta);

/// F = -1/2 J H, the sigma-antisymmetric matrix with q(Z) = sigma(Z, F Z).
ComplexMatrix fundamental_matrix(const QuadraticForm& q);

/// Re q > 0 away from the origin, i.e. Re H positive definite.
bool is_elliptic(const QuadraticForm& q);

struct HoReduction {
  double sqrt_delta;
  Complex gamma;
};

/// For real positive q = a x^2 + 2 b x xi + c xi^2: delta = ac - b^2 and
/// gamma = (sqrt(delta) + i b) / c, so q = (sqrt(delta)/Re gamma)|xi - i gamma x|^2.
HoReduction ho_reduce_1d(const QuadraticForm& q);

/// Symbol of the adjoint operator: (c, A) -> (conj c, conj A).
GaussianSymbol adjoint_symbol(const GaussianSymbol& g);

/// L(gamma) = (i c + gamma a) / (d - i gamma b). Throws kPoleAtGamma.
Complex mobius_transport(const CanonicalMap2x2& k, Complex gamma);

}  // namespace gaussnorm
