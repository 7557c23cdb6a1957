#include "gaussnorm/norms.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gaussnorm/config.hpp"
#include "gaussnorm/error.hpp"
#include "gaussnorm/sharp.hpp"

namespace gaussnorm {

using std::numbers::pi;

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::kUnitary:
      return "unitary";
    case Classification::kHeatType:
      return "heat_type";
    case Classification::kOscillatorType:
      return "oscillator_type";
  }
  return "unknown";
}

double davies_constant(double theta, Complex t) {
  const double x = std::sinh(2.0 * t.real());
  const double y = std::sin(2.0 * t.imag());
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return x * x * c * c - y * y * s * s;
}

double norm_from_constant(double a) {
  return 1.0 / std::sqrt(std::sqrt(1.0 + a) + std::sqrt(a));
}

DaviesResult davies_norm(double theta, Complex t) {
  const RegionReport region = region_report(theta, t);
  if (!region.bounded) {
    const double deficit = region.a - 1.0 - region.b;
    std::ostringstream os;
    os << "exp(-tQ) is unbounded at theta=" << theta << " t=" << t << ": a=" << region.a
       << " b=" << region.b << " a-1-b=" << deficit;
    throw Error(Errc::kUnbounded, os.str(), deficit);
  }
  DaviesResult r;
  r.theta = theta;
  r.t = t;
  r.bounded = true;
  r.compact = region.compact;
  if (region.special_imaginary || !(t.real() > 0.0)) {
    // unitary group: the points of (i pi/2)Z, or the whole imaginary axis at theta = 0
    r.classification = Classification::kUnitary;
    r.compact = false;
    return r;
  }
  r.phi = region.phi;
  const double edge = std::abs(*r.phi) + std::abs(theta) - 0.5 * pi;
  double a = davies_constant(theta, t);
  if (std::abs(edge) <= kTol.boundary_band || a <= 0.0) {
    r.classification = Classification::kHeatType;
    r.A = 0.0;
    r.norm = 1.0;
    r.delta = 0.0;
    return r;
  }
  r.A = a;
  r.norm = norm_from_constant(a);
  r.delta = a / (1.0 + a);
  r.classification = Classification::kOscillatorType;
  r.sv_ratio = 1.0 / (std::sqrt(1.0 + a) + std::sqrt(a));
  return r;
}

std::vector<double> davies_singular_values(double theta, Complex t, int k_max) {
  if (k_max < 0) throw Error(Errc::kInvalidArgument, "k_max must be nonnegative");
  const DaviesResult d = davies_norm(theta, t);
  if (d.classification != Classification::kOscillatorType) {
    throw Error(Errc::kNotOscillatorType,
                std::string("classification is ") + std::string(classification_name(d.classification)));
  }
  const double ratio = *d.sv_ratio;
  std::vector<double> out;
  out.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) out.push_back(std::pow(ratio, k + 0.5));
  return out;
}

Complex ho_action(Complex r, int k) {
  Complex num = 1.0;
  const Complex base = 1.0 - r;
  for (int j = 0; j < k; ++j) num *= base;
  Complex den = 1.0 + r;
  for (int j = 0; j < k; ++j) den *= (1.0 + r);
  return num / den;
}

double HolomorphicWeight::operator()(Complex z) const {
  return alpha * std::norm(z) + (beta * z * z).real();
}

HolomorphicWeight HolomorphicWeight::davies(double theta) {
  const double c = std::cos(theta);
  return {0.5 / c, kI * std::polar(1.0, theta) * std::sin(theta) / (2.0 * c)};
}

HolomorphicWeight HolomorphicWeight::dilated(Complex lambda) const {
  return {alpha * std::norm(lambda), beta * lambda * lambda};
}

WeightPair weight_reduce(const HolomorphicWeight& phi1, const HolomorphicWeight& phi2) {
  if (!phi1.strictly_plurisubharmonic() || !phi2.strictly_plurisubharmonic()) {
    throw Error(Errc::kNotPlurisubharmonic, "weight has nonpositive Laplacian coefficient");
  }
  return {phi2.alpha / phi1.alpha, std::abs(phi2.beta - phi1.beta) / phi1.alpha};
}

EmbeddingResult embedding_norm(const HolomorphicWeight& phi1, const HolomorphicWeight& phi2) {
  const WeightPair w = weight_reduce(phi1, phi2);
  return embedding_norm(w.a, w.b);
}

EmbeddingResult embedding_norm(double a, double b) {
  if (!(a > 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(Errc::kInvalidArgument, "embedding_norm needs a > 0 and b >= 0");
  }
  EmbeddingResult r;
  r.a = a;
  r.b = b;
  const double band = kTol.boundary_band;
  const double gap = a - b - 1.0;
  r.bounded = gap >= -band;
  if (!r.bounded) return r;
  if (b <= band) {
    r.gamma_star = 0.0;
    r.norm = 1.0 / std::sqrt(a);
    return r;
  }
  if (std::abs(gap) <= band) {
    r.gamma_star = -1.0;
    r.norm = std::pow(a, -0.25);
    return r;
  }
  // k^2 - 4b^2 = (a - b - 1)(a + b + 1)(k + 2b) with k = a^2 - b^2 - 1
  const double k = (a - b) * (a + b) - 1.0;
  const double disc = gap * (a + b + 1.0) * (k + 2.0 * b);
  const double gamma = -2.0 * b / (k + std::sqrt(disc));
  r.gamma_star = gamma;
  const double den = a * a - (b - gamma) * (b - gamma);
  r.norm = std::pow((1.0 - gamma * gamma) / den, 0.25);
  return r;
}

WeightPair davies_to_embedding(double theta, Complex t) {
  if (!(std::abs(theta) < 0.5 * pi)) throw Error(Errc::kInvalidArgument, "need |theta| < pi/2");
  const double rho = t.real();
  const double a = std::exp(4.0 * rho);
  // |e^{4t} - 1| = 2 e^{2 Re t} |sinh 2t|
  const double m = 2.0 * std::exp(2.0 * rho) * std::sqrt(sinh2t_abs_sq(t));
  return {a, m * std::abs(std::sin(theta))};
}

DaviesParameters embedding_to_davies(double a, double b) {
  if (!(a > 0.0) || !(b >= 0.0) || b > a + 1.0) {
    throw Error(Errc::kInvalidArgument, "need a > 0 and 0 <= b <= a + 1");
  }
  return {std::asin(b / (a + 1.0)), Complex(0.25 * std::log(a), 0.25 * pi)};
}

double general_gaussian_norm(const GaussianSymbol& g) {
  if (!g.integrable()) throw Error(Errc::kNotIntegrable, "Re A is not positive definite");
  const ComplexMatrix& a = g.exponent();
  const SharpIntermediates s = sharp_intermediates(a.conjugate(), a);
  const Complex det = determinant(s.d);
  if (!(det.real() > 0.0) || std::abs(det.imag()) > 1e-9 * std::abs(det)) {
    std::ostringstream os;
    os << "det D = " << det << " is not positive real; D =\n" << s.d;
    throw Error(Errc::kInternalContractViolation, os.str());
  }
  const double scale = std::max(1.0, max_abs(s.b));
  if (s.b.imag().cwiseAbs().maxCoeff() > kTol.gram_real_rel * scale) {
    std::ostringstream os;
    os << "Gram exponent is not real; B =\n" << s.b;
    throw Error(Errc::kInternalContractViolation, os.str());
  }
  const RealMatrix b = s.b.real();
  std::vector<double> sympl;
  try {
    sympl = symplectic_eigenvalues(b);
  } catch (const Error& e) {
    std::ostringstream os;
    os << "Gram exponent is not positive definite (" << e.what() << "); B =\n" << b;
    throw Error(Errc::kInternalContractViolation, os.str());
  }
  double prod = 1.0;
  for (double sj : sympl) {
    if (sj > 2.0 + kTol.gram_eig_slack) {
      std::ostringstream os;
      os << "symplectic eigenvalue " << sj << " exceeds 2; B =\n" << b;
      throw Error(Errc::kInternalContractViolation, os.str(), sj);
    }
    prod *= 1.0 + 0.5 * sj;
  }
  return std::abs(g.prefactor()) * std::pow(det.real(), -0.25) / std::sqrt(prod);
}

double semigroup_norm(const QuadraticForm& q, double t) {
  return general_gaussian_norm(mehler_symbol(q, t));
}

QuadraticForm supersymmetric_form(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(Errc::kDimensionMismatch, "M must be square and nonempty");
  }
  const Eigen::Index n = m.rows();
  const ComplexMatrix sym = symmetrize(m);
  const ComplexMatrix skew = 0.5 * kI * (m - m.transpose());
  ComplexMatrix h(2 * n, 2 * n);
  h.topLeftCorner(n, n) = sym;
  h.bottomRightCorner(n, n) = sym;
  h.bottomLeftCorner(n, n) = skew;
  h.topRightCorner(n, n) = -skew;
  return QuadraticForm(h);
}

double supersymmetric_norm(const ComplexMatrix& m, Complex t) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(Errc::kDimensionMismatch, "M must be square and nonempty");
  }
  const double sn = spectral_norm(mat_exp(-t * m));
  if (sn > 1.0 + kTol.boundary_band) {
    std::ostringstream os;
    os << "||exp(-tM)|| = " << sn << " > 1";
    throw Error(Errc::kUnbounded, os.str(), sn);
  }
  return std::exp(-0.5 * (t * m.trace()).real());
}

}  // namespace gaussnorm
