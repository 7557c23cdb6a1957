#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gaussnorm/error.hpp"
#include "gaussnorm/mehler.hpp"
#include "gaussnorm/oracles.hpp"
#include "gaussnorm/symbols.hpp"
#include "support.hpp"

using namespace gaussnorm;
using std::numbers::pi;
using testing::code_of;

namespace {

ComplexVector probe(std::mt19937_64& rng, int dim) {
  return testing::random_complex(rng, dim, 1).col(0).real().cast<Complex>();
}

}  // namespace

TEST_CASE("quadratic form validation") {
  CHECK(code_of([] { QuadraticForm(ComplexMatrix::Zero(3, 3)); }) == Errc::kDimensionMismatch);
  CHECK(code_of([] { QuadraticForm(ComplexMatrix::Zero(2, 4)); }) == Errc::kDimensionMismatch);
  ComplexMatrix h(2, 2);
  h << 1.0, 2.0, 0.0, 1.0;
  CHECK(code_of([&] { QuadraticForm q(h); }) == Errc::kNotSymmetric);

  const QuadraticForm d = QuadraticForm::davies(0.3);
  CHECK(d.hessian()(0, 0) == 2.0 * std::polar(1.0, 0.3));
  CHECK(d.hessian()(1, 1) == 2.0 * std::polar(1.0, -0.3));
  CHECK(d.hessian()(0, 1) == 0.0);
  ComplexVector z(2);
  z << 1.5, -0.5;
  CHECK(std::abs(d(z) - (std::polar(1.0, 0.3) * 2.25 + std::polar(1.0, -0.3) * 0.25)) < 1e-15);
}

TEST_CASE("gaussian symbol flags") {
  const GaussianSymbol g(1.0, 2.0 * ComplexMatrix::Identity(2, 2));
  CHECK(g.integrable());
  CHECK(g.bounded());
  ComplexMatrix semi = ComplexMatrix::Zero(2, 2);
  semi(0, 0) = 1.0;
  semi(1, 1) = Complex(0.0, 3.0);
  const GaussianSymbol s(1.0, semi);
  CHECK(s.bounded());
  CHECK_FALSE(s.integrable());
  semi(1, 1) = -0.1;
  const GaussianSymbol u(1.0, semi);
  CHECK_FALSE(u.bounded());

  ComplexVector z(2);
  z << 1.0, 0.5;
  CHECK(std::abs(g(z) - std::exp(-1.25)) < 1e-15);
}

TEST_CASE("fundamental matrix") {
  const double th = 0.7;
  const ComplexMatrix f = fundamental_matrix(QuadraticForm::davies(th));
  CHECK(std::abs(f(0, 0)) < 1e-15);
  CHECK(std::abs(f(0, 1) - std::polar(1.0, -th)) < 1e-15);
  CHECK(std::abs(f(1, 0) + std::polar(1.0, th)) < 1e-15);
  CHECK(std::abs(f(1, 1)) < 1e-15);

  const ComplexMatrix fx = fundamental_matrix(QuadraticForm::from_coefficients(1.0, 0.0, 0.0));
  CHECK(std::abs(fx(1, 0) + 1.0) < 1e-15);
  CHECK(std::abs(fx(0, 0)) + std::abs(fx(0, 1)) + std::abs(fx(1, 1)) < 1e-15);

  const ComplexMatrix fh = fundamental_matrix(QuadraticForm::from_coefficients(0.5, 0.0, 0.5));
  CHECK(testing::rel_gap(fh * fh, -0.25 * ComplexMatrix::Identity(2, 2)) < 1e-15);

  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    const int n = 1 + k % 3;
    const ComplexMatrix r = testing::random_complex(rng, 2 * n, 2 * n);
    const QuadraticForm q(r + r.transpose());
    const ComplexMatrix fq = fundamental_matrix(q);
    const ComplexMatrix j = symplectic_j(n).cast<Complex>();
    const ComplexVector z = probe(rng, 2 * n);
    const ComplexVector w = probe(rng, 2 * n);
    const Complex sigma_zfz = z.transpose() * j * fq * z;
    CHECK(std::abs(sigma_zfz - q(z)) < 1e-12 * std::max(1.0, std::abs(q(z))));
    const Complex lhs = (fq * z).transpose() * j * w;
    const Complex rhs = z.transpose() * j * (fq * w);
    CHECK(std::abs(lhs + rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("ellipticity") {
  CHECK(is_elliptic(QuadraticForm::davies(1.2)));
  CHECK(is_elliptic(QuadraticForm::davies(-1.5)));
  CHECK_FALSE(is_elliptic(QuadraticForm::from_coefficients(1.0, 0.0, 0.0)));
  CHECK_FALSE(is_elliptic(QuadraticForm::from_coefficients(kI, 0.0, 1.0)));
}

TEST_CASE("harmonic oscillator reduction") {
  HoReduction r = ho_reduce_1d(QuadraticForm::from_coefficients(1.0, 0.0, 1.0));
  CHECK(r.sqrt_delta == doctest::Approx(1.0));
  CHECK(std::abs(r.gamma - 1.0) < 1e-15);
  r = ho_reduce_1d(QuadraticForm::from_coefficients(4.0, 0.0, 1.0));
  CHECK(r.sqrt_delta == doctest::Approx(2.0));
  CHECK(std::abs(r.gamma - 2.0) < 1e-15);

  const QuadraticForm q = QuadraticForm::from_coefficients(1.0, 1.0, 2.0);
  r = ho_reduce_1d(q);
  CHECK(r.sqrt_delta == doctest::Approx(1.0));
  CHECK(std::abs(r.gamma - Complex(0.5, 0.5)) < 1e-15);
  // q = (sqrt(delta) / Re gamma) |xi - i gamma x|^2
  std::mt19937_64 rng(12);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 10; ++k) {
    const double x = nd(rng), xi = nd(rng);
    ComplexVector z(2);
    z << x, xi;
    const double rhs = r.sqrt_delta / r.gamma.real() * std::norm(xi - kI * r.gamma * x);
    CHECK(std::abs(q(z) - rhs) < 1e-12);
  }

  CHECK(code_of([] { ho_reduce_1d(QuadraticForm::from_coefficients(1.0, 2.0, 1.0)); }) == Errc::kNotPositive);
  CHECK(code_of([] { ho_reduce_1d(QuadraticForm::davies(0.2)); }) == Errc::kNotPositive);
  CHECK(code_of([] { ho_reduce_1d(QuadraticForm(ComplexMatrix::Identity(4, 4))); }) ==
        Errc::kDimensionMismatch);
}

TEST_CASE("ground state of the reduced oscillator") {
  // q^w u_gamma = sqrt(delta) u_gamma, tested through the heat semigroup:
  // exp(-s q^w) u_gamma = exp(-s sqrt(delta)) u_gamma
  const QuadraticForm q = QuadraticForm::from_coefficients(1.0, 1.0, 2.0);
  const HoReduction r = ho_reduce_1d(q);
  const double s = 0.3;
  const GaussianKernel k = kernel_from_weyl(mehler_symbol(q, s));
  const auto u = [&r](double x) { return std::exp(-0.5 * r.gamma * x * x); };
  const GaussHermiteRule rule = gauss_hermite(120);
  for (double x : {-1.0, 0.0, 0.4, 1.3}) {
    Complex sum = 0.0;
    RealVector xv(1), yv(1);
    xv << x;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
      yv << rule.nodes(i);
      sum += rule.plain_weights(i) * k(xv, yv) * u(rule.nodes(i));
    }
    CHECK(std::abs(sum - std::exp(-s * r.sqrt_delta) * u(x)) < 1e-8);
  }
}

TEST_CASE("adjoint symbol") {
  const GaussianSymbol real_g(2.0, 3.0 * ComplexMatrix::Identity(2, 2));
  const GaussianSymbol a = adjoint_symbol(real_g);
  CHECK(a.prefactor() == real_g.prefactor());
  CHECK(testing::rel_gap(a.exponent(), real_g.exponent()) == 0.0);

  const Complex t(0.6, 0.3);
  const double th = 0.5;
  const GaussianSymbol adj = adjoint_symbol(davies_mehler(th, t));
  const GaussianSymbol other = davies_mehler(-th, std::conj(t));
  CHECK(std::abs(adj.prefactor() - other.prefactor()) < 1e-15);
  CHECK(testing::rel_gap(adj.exponent(), other.exponent()) < 1e-15);

  const GaussianSymbol twice = adjoint_symbol(adjoint_symbol(davies_mehler(th, t)));
  CHECK(twice.prefactor() == davies_mehler(th, t).prefactor());
}

TEST_CASE("moebius transport") {
  const CanonicalMap2x2 id = CanonicalMap2x2::make(1.0, 0.0, 0.0, 1.0);
  CHECK(mobius_transport(id, Complex(0.3, 0.2)) == Complex(0.3, 0.2));

  const CanonicalMap2x2 cayley = bargmann_map(0.0);
  for (Complex g : {Complex(0.5, 0.0), Complex(2.0, 1.0), Complex(0.1, -3.0)}) {
    CHECK(std::abs(mobius_transport(cayley, g) - (g - 1.0) / (g + 1.0)) < 1e-15);
  }
  CHECK(code_of([&] { mobius_transport(cayley, -1.0); }) == Errc::kPoleAtGamma);
  CHECK(code_of([] { CanonicalMap2x2::make(1.0, 1.0, 1.0, 1.0); }) == Errc::kInvalidArgument);

  std::mt19937_64 rng(13);
  std::normal_distribution<double> nd;
  const auto random_real_map = [&] {
    double a = nd(rng);
    if (std::abs(a) < 0.2) a = a < 0.0 ? -0.2 : 0.2;
    const double b = nd(rng), c = nd(rng);
    return CanonicalMap2x2::make(a, b, c, (1.0 + b * c) / a);
  };
  int preserved = 0;
  for (int k = 0; k < 1000; ++k) {
    const CanonicalMap2x2 m = random_real_map();
    CHECK(m.is_real());
    const Complex g(std::exp(nd(rng)), nd(rng));
    if (mobius_transport(m, g).real() > 0.0) ++preserved;
  }
  CHECK(preserved == 1000);

  for (int k = 0; k < 50; ++k) {
    const CanonicalMap2x2 k1 = random_real_map();
    const CanonicalMap2x2 k2 = random_real_map();
    const Complex g(std::exp(nd(rng)), nd(rng));
    const Complex lhs = mobius_transport(compose(k1, k2), g);
    const Complex rhs = mobius_transport(k1, mobius_transport(k2, g));
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}
