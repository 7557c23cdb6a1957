#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gaussnorm/error.hpp"
#include "gaussnorm/mehler.hpp"
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

}  // namespace

TEST_CASE("mehler symbol of the harmonic oscillator") {
  const QuadraticForm q0 = QuadraticForm::from_coefficients(1.0, 0.0, 1.0);
  for (double r : {0.1, 0.5, 0.9}) {
    const GaussianSymbol g = mehler_symbol(q0, std::atanh(r));
    CHECK(std::abs(g.prefactor() - std::sqrt(1.0 - r * r)) < 1e-14);
    CHECK(rel_gap(g.exponent(), 2.0 * r * ComplexMatrix::Identity(2, 2)) < 1e-14);
    CHECK(g.integrable());
  }
  CHECK(symbol_gap(mehler_symbol(QuadraticForm::davies(0.0), 1.7), davies_mehler(0.0, 1.7)) < 1e-14);
}

TEST_CASE("mehler symbol matches the Davies closed form") {
  for (double th : {-1.2, -0.4, 0.3, pi / 4, 5 * pi / 12}) {
    for (double t : {0.05, 0.5, 1.0, 2.5}) {
      CHECK(symbol_gap(mehler_symbol(QuadraticForm::davies(th), t), davies_mehler(th, t)) < 1e-12);
    }
  }
}

TEST_CASE("mehler semigroup property") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  for (int k = 0; k < 20; ++k) {
    const QuadraticForm q = random_elliptic_form(rng, 1 + k % 2);
    const double s = unit(rng), t = unit(rng);
    const GaussianSymbol lhs = mehler_symbol(q, s + t);
    const GaussianSymbol rhs = sharp_product(mehler_symbol(q, s), mehler_symbol(q, t));
    CHECK(symbol_gap(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("coupled 2D mehler kernel composes") {
  std::mt19937_64 rng(22);
  const QuadraticForm q = random_elliptic_form(rng, 2, 0.15, 0.2);
  const GaussianKernel half = kernel_from_weyl(mehler_symbol(q, 0.15));
  const GaussianKernel full = kernel_from_weyl(mehler_symbol(q, 0.3));
  const GaussianKernel both = compose_kernels(half, half);
  CHECK(std::abs(both.prefactor - full.prefactor) < 1e-9 * std::abs(full.prefactor));
  CHECK(rel_gap(both.exponent, full.exponent) < 1e-9);
}

TEST_CASE("mehler errors") {
  CHECK(code_of([] { mehler_symbol(QuadraticForm::from_coefficients(1.0, 0.0, 0.0), 1.0); }) ==
        Errc::kNotElliptic);
  CHECK(code_of([] { mehler_symbol(QuadraticForm::davies(0.2), 0.0); }) == Errc::kInvalidArgument);
  CHECK(code_of([] { mehler_symbol(QuadraticForm::davies(0.2), -1.0); }) == Errc::kInvalidArgument);
  CHECK(code_of([] { davies_mehler(0.2, {0.0, pi / 2}); }) == Errc::kExceptionalTime);
  CHECK(code_of([] { region_report(pi / 2, 1.0); }) == Errc::kInvalidArgument);
}

TEST_CASE("Davies symbol values") {
  GaussianSymbol g = davies_mehler(0.0, 1.0);
  CHECK(std::abs(g.prefactor() - 1.0 / std::cosh(1.0)) < 1e-15);
  CHECK(rel_gap(g.exponent(), 2.0 * std::tanh(1.0) * ComplexMatrix::Identity(2, 2)) < 1e-15);

  g = davies_mehler(0.0, {0.0, pi / 4});
  CHECK(std::abs(g.prefactor() - std::sqrt(2.0)) < 1e-14);
  CHECK(rel_gap(g.exponent(), Complex(0.0, 2.0) * ComplexMatrix::Identity(2, 2)) < 1e-14);
  CHECK(g.bounded());
  CHECK_FALSE(g.integrable());
  CHECK(region_report(0.0, {0.0, pi / 4}).bounded);

  g = davies_mehler(0.8, 1e-12);
  CHECK(std::abs(g.prefactor() - 1.0) < 1e-15);
  CHECK(max_abs(g.exponent()) < 1e-11);
}

TEST_CASE("bounded flag of the Davies symbol agrees with the region") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> re(-0.5, 2.0), im(-3.0, 3.0), th(-1.5, 1.5);
  int compared = 0;
  for (int k = 0; k < 2000; ++k) {
    const double theta = th(rng);
    const Complex t(re(rng), im(rng));
    const RegionReport r = region_report(theta, t);
    if (std::abs(r.algebraic_margin) < 1e-6 || std::abs(std::cosh(t)) < 1e-3) continue;
    CHECK(davies_mehler(theta, t).bounded() == r.bounded);
    ++compared;
  }
  CHECK(compared > 1500);
}

TEST_CASE("region report examples") {
  RegionReport r = region_report(0.0, {0.5, 3.0});
  CHECK(r.bounded);
  CHECK(r.compact);

  r = region_report(pi / 4, 1.0);
  REQUIRE(r.phi.has_value());
  CHECK(*r.phi == 0.0);
  CHECK(r.bounded);
  CHECK(r.compact);

  r = region_report(pi / 4, {0.01, 0.7});
  CHECK_FALSE(r.bounded);
  CHECK(*r.phi > pi / 4);

  r = region_report(pi / 4, {0.0, pi / 2});
  CHECK(r.special_imaginary);
  CHECK(r.bounded);
  CHECK_FALSE(r.compact);

  r = region_report(pi / 3, {0.0, -pi});
  CHECK(r.special_imaginary);
  CHECK(r.bounded);

  r = region_report(pi / 6, {-0.2, 0.0});
  CHECK_FALSE(r.bounded);
  r = region_report(0.0, {0.0, 1.0});
  CHECK(r.bounded);
  CHECK_FALSE(r.compact);
  r = region_report(0.2, {0.0, 1.0});
  CHECK_FALSE(r.bounded);
}

TEST_CASE("region characterizations agree on a 200 x 200 grid") {
  for (double th : {0.0, pi / 6, pi / 4, 5 * pi / 12}) {
    int bounded = 0;
    for (int i = 0; i < 200; ++i) {
      for (int j = 0; j < 200; ++j) {
        const Complex t(0.001 + (1.5 - 0.001) * i / 199.0, -pi + 2 * pi * j / 199.0);
        const RegionReport r = region_report(th, t);
        bounded += r.bounded ? 1 : 0;
      }
    }
    CHECK(bounded > 0);
  }
}

TEST_CASE("sinh identity") {
  std::mt19937_64 rng(24);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 100; ++k) {
    const Complex t(nd(rng), 2.0 * nd(rng));
    const double ref = std::norm(std::sinh(2.0 * t));
    CHECK(std::abs(sinh2t_abs_sq(t) - ref) <= 1e-12 * std::max(1.0, ref));
  }
  CHECK(is_special_imaginary({0.0, 3 * pi / 2}));
  CHECK_FALSE(is_special_imaginary({0.0, 1.0}));
  CHECK_FALSE(is_special_imaginary({1e-6, pi / 2}));
}
