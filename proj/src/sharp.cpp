#include "gaussnorm/sharp.hpp"

#include <cmath>
#include <sstream>

#include "branch.hpp"
#include "gaussnorm/config.hpp"
#include "gaussnorm/error.hpp"
#include "gaussnorm/mehler.hpp"

namespace gaussnorm {

namespace {

void check_factors(const GaussianSymbol& g1, const GaussianSymbol& g2) {
  if (g1.n() != g2.n()) {
    throw Error(Errc::kDimensionMismatch, "sharp product of symbols of different dimension");
  }
  if (!g1.integrable() || !g2.integrable()) {
    throw Error(Errc::kNotIntegrable, "sharp product needs Re A positive definite for both factors");
  }
}

// Returns the symmetrized B; drift of the raw B from symmetry is an internal error.
ComplexMatrix checked_b(const ComplexMatrix& raw) {
  const double scale = std::max(max_abs(raw), 1e-300);
  const double asym = max_abs(raw - raw.transpose());
  if (asym > kTol.sharp_symmetry * scale) {
    std::ostringstream os;
    os << "sharp exponent asymmetric by " << asym / scale;
    throw Error(Errc::kInternalContractViolation, os.str());
  }
  return symmetrize(raw);
}

}  // namespace

SharpIntermediates sharp_intermediates(const ComplexMatrix& a1, const ComplexMatrix& a2) {
  const auto dim = a1.rows();
  const ComplexMatrix j = symplectic_j(static_cast<int>(dim / 2)).cast<Complex>();
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  SharpIntermediates out;
  out.d = id - 0.25 * a2 * j * a1 * j;
  ComplexMatrix dinv_a2;
  try {
    dinv_a2 = solve(out.d, a2);
  } catch (const Error& e) {
    throw Error(Errc::kSingularD, e.what());
  }
  const ComplexMatrix left = id + 0.5 * kI * a1 * j;
  const ComplexMatrix right = id - 0.5 * kI * j * a1;
  out.b = checked_b(a1 + left * dinv_a2 * right);
  return out;
}

GaussianSymbol sharp_product(const GaussianSymbol& g1, const GaussianSymbol& g2) {
  check_factors(g1, g2);
  const SharpIntermediates s = sharp_intermediates(g1.exponent(), g2.exponent());
  const ComplexMatrix& a1 = g1.exponent();
  const ComplexMatrix& a2 = g2.exponent();
  const ComplexMatrix j = symplectic_j(g1.n()).cast<Complex>();
  const ComplexMatrix id = ComplexMatrix::Identity(a1.rows(), a1.cols());
  // D(s) = 1 - s^2/4 A2 J A1 J
  const ComplexMatrix core = 0.25 * a2 * j * a1 * j;
  detail::ContinuedSqrt root([&](double u) { return determinant(id - (u * u) * core); });
  const Complex r = root.run(kTol.branch_steps);
  return GaussianSymbol(g1.prefactor() * g2.prefactor() / r, s.b);
}

GaussianSymbol gram_product(const GaussianSymbol& g) {
  const GaussianSymbol adj = adjoint_symbol(g);
  check_factors(adj, g);
  const SharpIntermediates s = sharp_intermediates(adj.exponent(), g.exponent());
  const Complex det = determinant(s.d);
  if (!(det.real() > 0.0) || std::abs(det.imag()) > 1e-10 * std::abs(det)) {
    std::ostringstream os;
    os << "det D = " << det << " is not positive real";
    throw Error(Errc::kInternalContractViolation, os.str());
  }
  const double c2 = std::norm(g.prefactor());
  return GaussianSymbol(c2 / std::sqrt(det.real()), s.b);
}

GaussianSymbol DaviesGram::symbol() const {
  ComplexMatrix b(2, 2);
  b << -2.0 * coefficients.cxx, -coefficients.cxxi, -coefficients.cxxi, -2.0 * coefficients.cxixi;
  return GaussianSymbol(prefactor, b);
}

DaviesGram davies_gram_symbol(double theta, Complex t) {
  const RegionReport region = region_report(theta, t);
  if (!region.bounded || !(t.real() > 0.0)) {
    throw Error(Errc::kOutsideRegion, "davies_gram_symbol needs t in the closed region with Re t > 0");
  }
  DaviesGramCoefficients c;
  c.tanh_t = std::tanh(t);
  c.phi = arg_tanh(t);
  const double mod = std::abs(c.tanh_t);
  c.a_theta = std::polar(mod, theta);
  c.f_val = c.a_theta + 1.0 / c.a_theta;
  const Complex f_minus = std::conj(c.a_theta) + 1.0 / std::conj(c.a_theta);  // f(A_{-theta})
  const Complex eiphi = std::polar(1.0, c.phi);
  c.cxx = -2.0 * std::real(eiphi / c.f_val);
  c.cxxi = 4.0 * std::imag(c.a_theta / c.f_val);
  c.cxixi = -2.0 * std::real(eiphi / f_minus);

  DaviesGram out;
  out.coefficients = c;
  out.prefactor = 2.0 / std::abs(c.f_val * std::sinh(2.0 * t));
  // p's fundamental matrix is 2 (Im(A/f), -Re(e^{i phi}/f_-); Re(e^{i phi}/f), -Im(A/f)).
  const double m11 = 0.5 * c.cxxi;
  const double m12 = c.cxixi;
  const double m21 = -c.cxx;
  out.det_f = -m11 * m11 - m12 * m21;
  return out;
}

}  // namespace gaussnorm
