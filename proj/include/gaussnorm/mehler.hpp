#pragma once

#include <optional>

#include "gaussnorm/symbols.hpp"

namespace gaussnorm {

/// Boundedness of exp(-t Q_theta) through the two characterizations: the
/// sector condition |arg tanh t| <= pi/2 - |theta| (plus the points of
/// (i pi/2)Z) and the weight condition a - b >= 1.
struct RegionReport {
  double theta = 0.0;
  Complex t;
  std::optional<double> phi;  // arg tanh t, defined for Re t > 0
  bool bounded = false;
  bool compact = false;
  double a = 0.0;
  double b = 0.0;
  bool special_imaginary = false;

  bool geometric_bounded = false;
  bool algebraic_bounded = false;
  // (pi/2 - |theta|) - |phi| for Re t > 0, NaN otherwise.
  double geometric_margin = 0.0;
  // (a - 1 - b) / (a + 1 + b).
  double algebraic_margin = 0.0;
};

/// Gaussian symbol of exp(-t q^w) for elliptic q and real t > 0.
/// Throws kNotElliptic, kInvalidArgument (t <= 0), kExceptionalTime.
GaussianSymbol mehler_symbol(const QuadraticForm& q, double t);

/// 1/cosh(t) exp(-tanh(t) q_theta), valid for complex t. Throws
/// kExceptionalTime when cosh t vanishes.
GaussianSymbol davies_mehler(double theta, Complex t);

/// Throws kCharacterizationMismatch if the two characterizations disagree
/// with both margins outside kTol.boundary_band.
RegionReport region_report(double theta, Complex t);

/// |sinh 2t|^2 evaluated as sinh^2(2 Re t) + sin^2(2 Im t).
double sinh2t_abs_sq(Complex t);

/// arg tanh t = arctan(sin 2 Im t / sinh 2 Re t) for Re t > 0.
double arg_tanh(Complex t);

/// True when t lies (to kTol.special_time) on (i pi/2)Z.
bool is_special_imaginary(Complex t);

}  // namespace gaussnorm
