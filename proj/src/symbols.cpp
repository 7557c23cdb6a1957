#include "gaussnorm/symbols.hpp"

#include <cmath>

#include "gaussnorm/config.hpp"
#include "gaussnorm/error.hpp"

namespace gaussnorm {

namespace {

int half_dimension(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw Error(Errc::kDimensionMismatch, std::string(what) + ": expected a 2n x 2n matrix");
  }
  if (!m.allFinite()) {
    throw Error(Errc::kInvalidArgument, std::string(what) + ": non-finite entry");
  }
  return static_cast<int>(m.rows() / 2);
}

void require_symmetric(const ComplexMatrix& m, const char* what) {
  const double scale = std::max(max_abs(m), 1e-300);
  if (max_abs(m - m.transpose()) > kTol.symmetry_rel * scale) {
    throw Error(Errc::kNotSymmetric, what);
  }
}

}  // namespace

QuadraticForm::QuadraticForm(const ComplexMatrix& hessian)
    : n_(half_dimension(hessian, "QuadraticForm")) {
  require_symmetric(hessian, "QuadraticForm hessian");
  hessian_ = symmetrize(hessian);
}

QuadraticForm QuadraticForm::davies(double theta) {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = 2.0 * std::polar(1.0, theta);
  h(1, 1) = 2.0 * std::polar(1.0, -theta);
  return QuadraticForm(h);
}

QuadraticForm QuadraticForm::from_coefficients(Complex a, Complex b, Complex c) {
  ComplexMatrix h(2, 2);
  h << 2.0 * a, 2.0 * b, 2.0 * b, 2.0 * c;
  return QuadraticForm(h);
}

Complex QuadraticForm::operator()(const ComplexVector& z) const {
  return 0.5 * z.transpose() * hessian_ * z;
}

GaussianSymbol::GaussianSymbol(Complex prefactor, const ComplexMatrix& exponent)
    : n_(half_dimension(exponent, "GaussianSymbol")), prefactor_(prefactor) {
  require_symmetric(exponent, "GaussianSymbol exponent");
  exponent_ = symmetrize(exponent);
  const RealMatrix re = exponent_.real();
  const SymEig eig = sym_eig(0.5 * (re + re.transpose()));
  const double lo = eig.values(0);
  const double scale = std::max(eig.values.cwiseAbs().maxCoeff(), 1e-300);
  bounded_ = lo >= -kTol.psd_rel * scale;
  integrable_ = lo > kTol.psd_rel * scale;
}

Complex GaussianSymbol::operator()(const ComplexVector& z) const {
  const Complex quad = z.transpose() * exponent_ * z;
  return prefactor_ * std::exp(-0.5 * quad);
}

CanonicalMap2x2 CanonicalMap2x2::make(Complex a, Complex b, Complex c, Complex d) {
  const Complex det = a * d - b * c;
  if (std::abs(det - 1.0) > 1e-12) {
    throw Error(Errc::kInvalidArgument, "canonical map must have ad - bc = 1");
  }
  return {a, b, c, d};
}

bool CanonicalMap2x2::is_real(double tol) const {
  return std::abs(a.imag()) <= tol && std::abs(b.imag()) <= tol && std::abs(c.imag()) <= tol &&
         std::abs(d.imag()) <= tol;
}

CanonicalMap2x2 compose(const CanonicalMap2x2& k1, const CanonicalMap2x2& k2) {
  // Inverse of K1 K2 is K2^{-1} K1^{-1}.
  return {k2.a * k1.a + k2.b * k1.c, k2.a * k1.b + k2.b * k1.d, k2.c * k1.a + k2.d * k1.c,
          k2.c * k1.b + k2.d * k1.d};
}

CanonicalMap2x2 bargmann_map(double theta) {
  const double r = 1.0 / std::sqrt(2.0);
  return CanonicalMap2x2::make(r, r * kI * std::polar(1.0, theta), r * kI * std::polar(1.0, -theta),
                               r);
}

ComplexMatrix fundamental_matrix(const QuadraticForm& q) {
  return -0.5 * symplectic_j(q.n()).cast<Complex>() * q.hessian();
}

bool is_elliptic(const QuadraticForm& q) {
  const SymEig eig = sym_eig(q.hessian().real());
  const double hi = eig.values(eig.values.size() - 1);
  return hi > 0.0 && eig.values(0) > kTol.elliptic_rel * hi;
}

HoReduction ho_reduce_1d(const QuadraticForm& q) {
  if (q.n() != 1) {
    throw Error(Errc::kDimensionMismatch, "ho_reduce_1d needs n = 1");
  }
  const ComplexMatrix& h = q.hessian();
  const double scale = max_abs(h);
  if (h.imag().cwiseAbs().maxCoeff() > kTol.symmetry_rel * scale) {
    throw Error(Errc::kNotPositive, "q is not real-valued");
  }
  const double a = 0.5 * h(0, 0).real();
  const double b = 0.5 * h(0, 1).real();
  const double c = 0.5 * h(1, 1).real();
  const double delta = a * c - b * b;
  if (!(a > 0.0) || !(c > 0.0) || !(delta > kTol.pd_rel * std::max(a, c) * std::max(a, c))) {
    throw Error(Errc::kNotPositive, "q is not positive definite");
  }
  const double root = std::sqrt(delta);
  return {root, Complex(root, b) / c};
}

GaussianSymbol adjoint_symbol(const GaussianSymbol& g) {
  return GaussianSymbol(std::conj(g.prefactor()), g.exponent().conjugate());
}

Complex mobius_transport(const CanonicalMap2x2& k, Complex gamma) {
  const Complex den = k.d - kI * gamma * k.b;
  if (std::abs(den) < kTol.mobius_pole) {
    throw Error(Errc::kPoleAtGamma, "d - i gamma b vanishes");
  }
  return (kI * k.c + gamma * k.a) / den;
}

}  // namespace gaussnorm
