#pragma once

#include "gaussnorm/symbols.hpp"

namespace gaussnorm {

/// D = 1 - 1/4 A2 J A1 J and the symmetrized exponent
/// B = A1 + (1 + i/2 A1 J) D^{-1} A2 (1 - i/2 J A1).
struct SharpIntermediates {
  ComplexMatrix d;
  ComplexMatrix b;
};

SharpIntermediates sharp_intermediates(const ComplexMatrix& a1, const ComplexMatrix& a2);

/// Weyl symbol of g1^w g2^w for integrable Gaussian factors. The square root
/// of det D is continued from the s -> 0 limit of the scaled exponents
/// s A1, s A2, where det D -> 1.
GaussianSymbol sharp_product(const GaussianSymbol& g1, const GaussianSymbol& g2);

/// adjoint(g) # g, the symbol of (g^w)* g^w. det D must be positive real and
/// the positive root is taken.
GaussianSymbol gram_product(const GaussianSymbol& g);

struct DaviesGramCoefficients {
  Complex tanh_t;   // T
  double phi;       // arg T
  Complex a_theta;  // |T| e^{i theta}
  Complex f_val;    // a_theta + 1 / a_theta
  double cxx;       // coefficient of x^2 in p
  double cxxi;      // coefficient of x xi
  double cxixi;     // coefficient of xi^2
};

struct DaviesGram {
  double prefactor;  // 2 / |f(A_theta) sinh 2t|
  DaviesGramCoefficients coefficients;
  double det_f;      // det of the fundamental matrix of p, equal to A/(1+A)

  /// The Gram symbol prefactor * exp(p) as a GaussianSymbol.
  GaussianSymbol symbol() const;
};

/// Closed form of the symbol of (e^{-tQ_theta})* e^{-tQ_theta}.
/// Throws kOutsideRegion if t is unbounded or purely imaginary.
DaviesGram davies_gram_symbol(double theta, Complex t);

}  // namespace gaussnorm
