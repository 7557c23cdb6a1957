#include "gaussnorm/mehler.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "branch.hpp"
#include "gaussnorm/config.hpp"
#include "gaussnorm/error.hpp"

namespace gaussnorm {

using std::numbers::pi;

double sinh2t_abs_sq(Complex t) {
  const double x = std::sinh(2.0 * t.real());
  const double y = std::sin(2.0 * t.imag());
  return x * x + y * y;
}

double arg_tanh(Complex t) {
  return std::atan(std::sin(2.0 * t.imag()) / std::sinh(2.0 * t.real()));
}

bool is_special_imaginary(Complex t) {
  const double tol = kTol.special_time;
  if (std::abs(t.real()) > tol * std::max(1.0, std::abs(t.imag()))) return false;
  const double k = t.imag() / (0.5 * pi);
  return std::abs(k - std::round(k)) <= tol * std::max(1.0, std::abs(k));
}

GaussianSymbol mehler_symbol(const QuadraticForm& q, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(Errc::kInvalidArgument, "mehler_symbol needs real t > 0");
  }
  if (!is_elliptic(q)) {
    throw Error(Errc::kNotElliptic, "Re q is not positive definite");
  }
  const ComplexMatrix f = -t * fundamental_matrix(q);
  MatTrig trig;
  try {
    trig = mat_trig(f);
  } catch (const Error& e) {
    throw Error(Errc::kExceptionalTime, e.what());
  }
  const ComplexMatrix jt = symplectic_j(q.n()).cast<Complex>() * trig.tan;
  const ComplexMatrix a = -(jt + jt.transpose());

  detail::ContinuedSqrt root([&f](double s) { return determinant(mat_trig(s * f).cos); });
  const Complex r = root.run(kTol.branch_steps);
  return GaussianSymbol(1.0 / r, a);
}

GaussianSymbol davies_mehler(double theta, Complex t) {
  const Complex ch = std::cosh(t);
  if (std::abs(ch) < kTol.exceptional_time) {
    throw Error(Errc::kExceptionalTime, "cosh t vanishes");
  }
  const Complex th = std::sinh(t) / ch;
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 2.0 * th * std::polar(1.0, theta);
  a(1, 1) = 2.0 * th * std::polar(1.0, -theta);
  return GaussianSymbol(1.0 / ch, a);
}

RegionReport region_report(double theta, Complex t) {
  if (!(std::abs(theta) < 0.5 * pi)) {
    throw Error(Errc::kInvalidArgument, "need |theta| < pi/2");
  }
  RegionReport r;
  r.theta = theta;
  r.t = t;
  r.special_imaginary = is_special_imaginary(t);

  const double rho = t.real();
  const double sin_theta = std::abs(std::sin(theta));
  const double sinh_abs = std::sqrt(sinh2t_abs_sq(t));
  const double grow = std::exp(2.0 * rho);
  r.a = grow * grow;
  // |e^{4t} - 1| = 2 e^{2 Re t} |sinh 2t|
  r.b = 2.0 * grow * sinh_abs * sin_theta;
  const double deficit = 2.0 * grow * (std::sinh(2.0 * rho) - sinh_abs * sin_theta);
  r.algebraic_margin = deficit / (r.a + 1.0 + r.b);

  const double band = kTol.boundary_band;
  r.algebraic_bounded = r.algebraic_margin >= -band;

  if (rho > 0.0) {
    r.phi = arg_tanh(t);
    r.geometric_margin = (0.5 * pi - std::abs(theta)) - std::abs(*r.phi);
    r.geometric_bounded = r.geometric_margin >= -band;
  } else {
    r.geometric_margin = std::numeric_limits<double>::quiet_NaN();
    r.geometric_bounded = (rho == 0.0 && theta == 0.0) || r.special_imaginary;
  }

  if (r.geometric_bounded != r.algebraic_bounded) {
    const bool geo_in_band = !(std::abs(r.geometric_margin) > band);  // NaN counts as in band
    const bool alg_in_band = std::abs(r.algebraic_margin) <= band;
    if (!geo_in_band && !alg_in_band) {
      std::ostringstream os;
      os << "theta=" << theta << " t=" << t << " geometric margin " << r.geometric_margin
         << " algebraic margin " << r.algebraic_margin;
      throw Error(Errc::kCharacterizationMismatch, os.str());
    }
  }

  r.bounded = r.algebraic_bounded;
  r.compact = r.algebraic_margin > band;
  return r;
}

}  // namespace gaussnorm
