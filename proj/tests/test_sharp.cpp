#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gaussnorm/mehler.hpp"
#include "gaussnorm/norms.hpp"
#include "gaussnorm/oracles.hpp"
#include "gaussnorm/sampling.hpp"
#include "gaussnorm/sharp.hpp"
#include "support.hpp"

using namespace gaussnorm;
using std::numbers::pi;
using testing::code_of;
using testing::rel_gap;

namespace {

double symbol_gap(const GaussianSymbol& a, const GaussianSymbol& b) {
  return std::max(std::abs(a.prefactor() - b.prefactor()) / std::max(1.0, std::abs(b.prefactor())),
                  rel_gap(a.exponent(), b.exponent()));
}

double kernel_gap(const GaussianKernel& a, const GaussianKernel& b) {
  return std::max(std::abs(a.prefactor - b.prefactor) / std::max(1.0, std::abs(b.prefactor)),
                  rel_gap(a.exponent, b.exponent));
}

}  // namespace

TEST_CASE("sharp product of the ground state projection with itself") {
  const GaussianSymbol g(1.0, 2.0 * ComplexMatrix::Identity(2, 2));
  const SharpIntermediates mid = sharp_intermediates(g.exponent(), g.exponent());
  CHECK(rel_gap(mid.d, 2.0 * ComplexMatrix::Identity(2, 2)) < 1e-15);
  CHECK(rel_gap(mid.b, 2.0 * ComplexMatrix::Identity(2, 2)) < 1e-15);
  const GaussianSymbol p = sharp_product(g, g);
  CHECK(std::abs(p.prefactor() - 0.5) < 1e-15);
  CHECK(rel_gap(p.exponent(), g.exponent()) < 1e-15);
}

TEST_CASE("sharp product of two scaled oscillators") {
  for (double r : {0.1, 0.5, 0.9}) {
    const GaussianSymbol g(1.0, 2.0 * r * ComplexMatrix::Identity(2, 2));
    const SharpIntermediates mid = sharp_intermediates(g.exponent(), g.exponent());
    CHECK(rel_gap(mid.d, (1.0 + r * r) * ComplexMatrix::Identity(2, 2)) < 1e-15);
    const GaussianSymbol p = sharp_product(g, g);
    CHECK(std::abs(p.prefactor() - 1.0 / (1.0 + r * r)) < 1e-15);
    CHECK(rel_gap(p.exponent(), 4.0 * r / (1.0 + r * r) * ComplexMatrix::Identity(2, 2)) < 1e-15);
  }
}

TEST_CASE("sharp product errors") {
  const GaussianSymbol g1(1.0, ComplexMatrix::Identity(2, 2));
  const GaussianSymbol g2(1.0, ComplexMatrix::Identity(4, 4));
  CHECK(code_of([&] { sharp_product(g1, g2); }) == Errc::kDimensionMismatch);
  ComplexMatrix semi = ComplexMatrix::Zero(2, 2);
  semi(0, 0) = 1.0;
  CHECK(code_of([&] { sharp_product(g1, GaussianSymbol(1.0, semi)); }) == Errc::kNotIntegrable);
}

TEST_CASE("generic Gram product matches the Davies closed form") {
  const double theta = pi / 6;
  const Complex t = 0.8;
  const GaussianSymbol g = davies_mehler(theta, t);
  const GaussianSymbol generic = sharp_product(adjoint_symbol(g), g);
  const DaviesGram closed = davies_gram_symbol(theta, t);
  CHECK(symbol_gap(generic, closed.symbol()) < 1e-12);
  CHECK(symbol_gap(gram_product(g), closed.symbol()) < 1e-12);

  const Complex tc(0.6, 0.3);
  const GaussianSymbol h = davies_mehler(theta, tc);
  CHECK(symbol_gap(sharp_product(adjoint_symbol(h), h), davies_gram_symbol(theta, tc).symbol()) < 1e-12);
}

TEST_CASE("Davies Gram symbol at theta = 0") {
  for (double t : {0.2, 1.0, 2.0}) {
    const DaviesGram gram = davies_gram_symbol(0.0, t);
    CHECK(std::abs(gram.prefactor - 1.0 / std::cosh(2 * t)) < 1e-14);
    CHECK(std::abs(gram.coefficients.cxx + std::tanh(2 * t)) < 1e-14);
    CHECK(std::abs(gram.coefficients.cxixi + std::tanh(2 * t)) < 1e-14);
    CHECK(std::abs(gram.coefficients.cxxi) < 1e-14);
  }
}

TEST_CASE("det F of the Gram exponent") {
  const DaviesGram gram = davies_gram_symbol(pi / 4, 1.0);
  const double a = 0.5 * std::pow(std::sinh(2.0), 2);
  CHECK(std::abs(gram.det_f - a / (1.0 + a)) < 1e-12);

  const double x = 0.3;
  const double y = 0.5 * std::asin(std::sinh(2 * x));
  const RegionReport r = region_report(pi / 4, {x, y});
  REQUIRE(r.phi.has_value());
  CHECK(std::abs(*r.phi - pi / 4) < 1e-14);
  CHECK(std::abs(davies_gram_symbol(pi / 4, {x, y}).det_f) < 1e-12);
}

TEST_CASE("Davies Gram symbol outside the region") {
  CHECK(code_of([] { davies_gram_symbol(pi / 4, {0.01, 0.7}); }) == Errc::kOutsideRegion);
  CHECK(code_of([] { davies_gram_symbol(0.0, {0.0, 0.5}); }) == Errc::kOutsideRegion);
}

TEST_CASE("modulus of f at A_theta") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> th(-1.4, 1.4), re(0.05, 2.0), im(-3.0, 3.0);
  int checked = 0;
  while (checked < 200) {
    const double theta = th(rng);
    const Complex t(re(rng), im(rng));
    if (!region_report(theta, t).bounded) continue;
    const DaviesGramCoefficients c = davies_gram_symbol(theta, t).coefficients;
    const double m = std::abs(c.tanh_t);
    const double ref = m * m + 1.0 / (m * m) + 2.0 * std::cos(2 * theta);
    CHECK(std::abs(std::norm(c.f_val) - ref) <= 1e-12 * ref);
    ++checked;
  }
}

TEST_CASE("self-adjoint products are positive") {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 500; ++k) {
    const GaussianSymbol g = random_integrable_symbol(rng, 1 + k % 3);
    const GaussianSymbol p = gram_product(g);
    CHECK(std::abs(p.prefactor().imag()) <= 1e-12 * std::abs(p.prefactor()));
    CHECK(p.prefactor().real() > 0.0);
    const ComplexMatrix& b = p.exponent();
    CHECK(b.imag().cwiseAbs().maxCoeff() <= 1e-9 * std::max(1.0, max_abs(b)));
    CHECK(sym_eig(b.real()).values(0) > 0.0);
  }
}

TEST_CASE("sharp product agrees with kernel composition") {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 60; ++k) {
    const int n = 1 + k % 3;
    const GaussianSymbol g1 = random_integrable_symbol(rng, n);
    const GaussianSymbol g2 = random_integrable_symbol(rng, n);
    const GaussianKernel via_symbol = kernel_from_weyl(sharp_product(g1, g2));
    const GaussianKernel via_kernel = compose_kernels(kernel_from_weyl(g1), kernel_from_weyl(g2));
    CHECK(kernel_gap(via_symbol, via_kernel) < 1e-9);
  }
}

TEST_CASE("sharp product is associative") {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 40; ++k) {
    const int n = 1 + k % 2;
    const GaussianSymbol g1 = random_integrable_symbol(rng, n);
    const GaussianSymbol g2 = random_integrable_symbol(rng, n);
    const GaussianSymbol g3 = random_integrable_symbol(rng, n);
    CHECK(symbol_gap(sharp_product(sharp_product(g1, g2), g3), sharp_product(g1, sharp_product(g2, g3))) <
          1e-8);
  }
}
