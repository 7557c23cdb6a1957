#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gaussnorm/mehler.hpp"
#include "gaussnorm/symbols.hpp"

namespace gaussnorm {

enum class Classification { kUnitary, kHeatType, kOscillatorType };

std::string_view classification_name(Classification c);

struct DaviesResult {
  double theta = 0.0;
  Complex t;
  std::optional<double> phi;  // undefined on (i pi/2)Z
  double A = 0.0;
  double norm = 1.0;
  double delta = 0.0;
  Classification classification = Classification::kUnitary;
  std::optional<double> sv_ratio;
  bool bounded = true;
  bool compact = false;
};

/// Norm of exp(-t Q_theta) on L^2(R) for t in the closed boundedness region.
/// Throws kUnbounded (payload: a - b - 1) outside it.
DaviesResult davies_norm(double theta, Complex t);

/// Closed-form A = 1/2 |sinh 2t|^2 (cos 2 theta + cos 2 phi) for Re t > 0,
/// evaluated as sinh^2(2 Re t) cos^2 theta - sin^2(2 Im t) sin^2 theta.
double davies_constant(double theta, Complex t);

/// (sqrt(1 + A) + sqrt(A))^{-1/2}
double norm_from_constant(double a);

/// s_k = (sqrt(1 + A) + sqrt(A))^{-(k + 1/2)}, k = 0..k_max.
/// Throws kNotOscillatorType unless delta > 0.
std::vector<double> davies_singular_values(double theta, Complex t, int k_max);

/// (1 - r)^k / (1 + r)^{k+1}: eigenvalue of exp(-r(x^2 + xi^2))^w on h_k.
Complex ho_action(Complex r, int k);

/// Real quadratic weight Phi(z) = alpha |z|^2 + Re(beta z^2) on C.
struct HolomorphicWeight {
  double alpha;
  Complex beta;

  bool strictly_plurisubharmonic() const { return alpha > 0.0; }
  double operator()(Complex z) const;

  /// Weight of the Davies FBI-Bargmann transform.
  static HolomorphicWeight davies(double theta);
  /// z -> Phi(lambda z)
  HolomorphicWeight dilated(Complex lambda) const;
};

struct WeightPair {
  double a;
  double b;
};

/// a = alpha2/alpha1, b = |beta2 - beta1|/alpha1. Throws kNotPlurisubharmonic.
WeightPair weight_reduce(const HolomorphicWeight& phi1, const HolomorphicWeight& phi2);

struct EmbeddingResult {
  double a = 0.0;
  double b = 0.0;
  bool bounded = false;
  std::optional<double> gamma_star;
  std::optional<double> norm;
};

/// Norm of H_{Phi1} -> H_{Phi2}.
EmbeddingResult embedding_norm(const HolomorphicWeight& phi1, const HolomorphicWeight& phi2);

/// Same, from the reduced parameters (a, b) with b >= 0.
EmbeddingResult embedding_norm(double a, double b);

/// (a, b) = (e^{4 Re t}, |(e^{4t} - 1) sin theta|).
WeightPair davies_to_embedding(double theta, Complex t);

struct DaviesParameters {
  double theta;
  Complex t;
};

/// t = i pi/4 + 1/4 log a, theta = arcsin(b / (a + 1)); inverse of
/// davies_to_embedding on the pairs it produces.
DaviesParameters embedding_to_davies(double a, double b);

/// Norm of g^w on L^2(R^n) for integrable g, via the Gram symbol
/// adjoint(g) # g and its symplectic eigenvalues.
double general_gaussian_norm(const GaussianSymbol& g);

/// Norm of exp(-t q^w) for elliptic q and real t > 0.
double semigroup_norm(const QuadraticForm& q, double t);

/// q(x, xi) = 1/2 M(xi + i x) . (xi - i x).
QuadraticForm supersymmetric_form(const ComplexMatrix& m);

/// exp(-1/2 Re(t Tr M)) when ||exp(-t M)|| <= 1; kUnbounded otherwise
/// (payload: the spectral norm).
double supersymmetric_norm(const ComplexMatrix& m, Complex t);

}  // namespace gaussnorm
