#include "gaussnorm/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "gaussnorm/error.hpp"
#include "gaussnorm/mehler.hpp"
#include "gaussnorm/norms.hpp"
#include "gaussnorm/oracles.hpp"
#include "gaussnorm/sampling.hpp"
#include "gaussnorm/sharp.hpp"

namespace gaussnorm {

using std::numbers::pi;

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.pass ? 0 : 1;
  return n;
}

bool is_suite_name(std::string_view suite) {
  return suite == "all" || suite == "davies" || suite == "sharp" || suite == "embedding" ||
         suite == "general";
}

namespace {

class Runner {
 public:
  Runner(std::string suite, std::ostream& out, VerifyReport& report)
      : suite_(std::move(suite)), out_(out), report_(report) {}

  // measured vs expected; relative tolerance scales by |expected|
  void check(const std::string& name, const std::function<double()>& measure, double expected,
             double tol, bool relative) {
    VerifyCase c;
    c.suite = suite_;
    c.name = name;
    c.expected = expected;
    c.tolerance = tol;
    c.relative = relative;
    try {
      c.measured = measure();
      const double scale = relative ? std::abs(expected) : 1.0;
      c.pass = std::abs(c.measured - expected) <= tol * scale;
    } catch (const std::exception& e) {
      c.measured = std::nan("");
      c.pass = false;
      c.note = e.what();
    }
    print(c);
    report_.cases.push_back(std::move(c));
  }

  // a deviation measured directly, to be at most tol
  void bound(const std::string& name, const std::function<double()>& deviation, double tol) {
    check(name, deviation, 0.0, tol, false);
  }

 private:
  void print(const VerifyCase& c) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %s/%s measured=%.15g expected=%.15g tol=%.1e%s", c.pass ? "PASS" : "FAIL",
                  c.suite.c_str(), c.name.c_str(), c.measured, c.expected, c.tolerance,
                  c.relative ? " (rel)" : "");
    out_ << buf;
    if (!c.note.empty()) out_ << "  [" << c.note << "]";
    out_ << '\n';
  }

  std::string suite_;
  std::ostream& out_;
  VerifyReport& report_;
};

double matrix_gap(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs(a - b) / std::max(1.0, max_abs(b));
}

double kernel_gap(const GaussianKernel& a, const GaussianKernel& b) {
  const double pre = std::abs(a.prefactor - b.prefactor) / std::max(1.0, std::abs(b.prefactor));
  return std::max(pre, matrix_gap(a.exponent, b.exponent));
}

double symbol_gap(const GaussianSymbol& a, const GaussianSymbol& b) {
  const double pre = std::abs(a.prefactor() - b.prefactor()) / std::max(1.0, std::abs(b.prefactor()));
  return std::max(pre, matrix_gap(a.exponent(), b.exponent()));
}

void davies_suite(std::ostream& out, VerifyReport& report, const VerifyOptions& opt) {
  Runner r("davies", out, report);
  // closed-form side, optionally with a perturbed constant
  const auto closed = [&opt](double theta, Complex t) {
    const DaviesResult d = davies_norm(theta, t);
    if (opt.perturb_a == 0.0 || d.classification == Classification::kUnitary) return d.norm;
    const double a = d.A == 0.0 ? opt.perturb_a : d.A * (1.0 + opt.perturb_a);
    return norm_from_constant(a);
  };
  const auto svd = [](double theta, Complex t, int count) {
    const GaussianKernel k = kernel_from_weyl(davies_mehler(theta, t));
    return kernel_svd_norm(k, suggested_grid(k), count, 1e-7);
  };

  const double thetas[] = {0.0, pi / 6, pi / 4, 5 * pi / 12};
  const char* names[] = {"0", "pi/6", "pi/4", "5pi/12"};
  for (int i = 0; i < 4; ++i) {
    const double th = thetas[i];
    r.check(std::string("svd_oracle_theta_") + names[i] + "_t_1", [&] { return svd(th, 1.0, 1).norm; },
            closed(th, 1.0), 1e-6, true);
  }
  r.check("galerkin_theta_pi/6_t_0.5", [] { return hermite_galerkin_norm(davies_mehler(pi / 6, 0.5), 64); },
          closed(pi / 6, 0.5), 1e-7, true);
  r.check("galerkin_theta_pi/4_t_1+0.5i",
          [] { return hermite_galerkin_norm(davies_mehler(pi / 4, {1.0, 0.5}), 64); },
          closed(pi / 4, {1.0, 0.5}), 1e-6, true);
  r.check("self_adjoint_t_0.7+2i", [&] { return closed(0.0, {0.7, 2.0}); }, std::exp(-0.7), 1e-14, true);
  r.check("self_adjoint_t_1.3-0.4i", [&] { return closed(0.0, {1.3, -0.4}); }, std::exp(-1.3), 1e-14, true);
  r.check("unitary_theta_pi/3_t_i_pi/2", [] { return davies_norm(pi / 3, {0.0, pi / 2}).norm; }, 1.0, 0.0,
          false);
  r.check("constant_theta_pi/4_t_1", [] { return davies_norm(pi / 4, 1.0).A; },
          0.5 * std::pow(std::sinh(2.0), 2), 1e-13, true);
  r.check("singular_value_s3_theta_0_t_1", [] { return davies_singular_values(0.0, 1.0, 3)[3]; },
          std::exp(-7.0), 1e-13, true);
  r.bound("singular_value_ratios_theta_pi/6_t_0.5",
          [&] {
            const KernelSvdResult s = svd(pi / 6, 0.5, 6);
            const double ratio = 1.0 / (std::sqrt(1.0 + davies_norm(pi / 6, 0.5).A) +
                                        std::sqrt(davies_norm(pi / 6, 0.5).A));
            const double expect = opt.perturb_a == 0.0
                                      ? ratio
                                      : std::pow(closed(pi / 6, 0.5), 2.0);
            double worst = 0.0;
            for (int k = 0; k + 1 < 6; ++k) {
              worst = std::max(worst, std::abs(s.singular_values[k + 1] / s.singular_values[k] - expect));
            }
            return worst;
          },
          1e-5);
  r.check("large_time_theta_pi/6", [&] { return std::exp(10.0) * closed(pi / 6, 10.0); },
          1.0 / std::sqrt(std::cos(pi / 6)), 1e-6, true);
  {
    const double th = pi / 6, ph = 0.3, eps = 1e-4;
    r.check("small_time_slope_theta_pi/6_phi_0.3",
            [&] { return (closed(th, std::polar(eps, ph)) - 1.0) / eps; },
            -std::sqrt(std::cos(ph + th) * std::cos(ph - th)), 1e-3, false);
  }
  r.check("weyl_norm_matches_closed_form_theta_pi/4_t_0.7",
          [] { return general_gaussian_norm(davies_mehler(pi / 4, 0.7)); }, closed(pi / 4, 0.7), 1e-12,
          true);
  r.bound("monotone_in_real_t_theta_5pi/12",
          [&] {
            double prev = 1.0;
            double worst = 0.0;
            for (int k = 1; k <= 100; ++k) {
              const double v = closed(5 * pi / 12, 0.03 * k);
              worst = std::max(worst, v - prev);
              prev = v;
            }
            return worst;
          },
          0.0);
  {
    const double th = pi / 6, rho = 0.2;
    const double y = 0.5 * std::asin(std::tan(pi / 2 - th) * std::sinh(2 * rho));
    r.check("heat_boundary_norm_one_theta_pi/6", [&] { return davies_norm(th, {rho, y}).norm; }, 1.0, 0.0,
            false);
  }
  r.bound("region_characterizations_agree",
          [] {
            double mismatches = 0.0;
            for (double th : {0.0, pi / 6, pi / 4, 5 * pi / 12}) {
              for (int i = 0; i < 60; ++i) {
                for (int j = 0; j < 60; ++j) {
                  try {
                    region_report(th, {-0.5 + 2.0 * i / 59.0, -2.0 + 4.0 * j / 59.0});
                  } catch (const Error& e) {
                    if (e.code() != Errc::kCharacterizationMismatch) throw;
                    mismatches += 1.0;
                  }
                }
              }
            }
            return mismatches;
          },
          0.0);
}

void sharp_suite(std::ostream& out, VerifyReport& report) {
  Runner r("sharp", out, report);
  std::mt19937_64 rng(20240611);
  r.bound("kernel_of_product_equals_composition_60_pairs",
          [&rng] {
            double worst = 0.0;
            for (int i = 0; i < 60; ++i) {
              const int n = 1 + i % 3;
              const GaussianSymbol g1 = random_integrable_symbol(rng, n);
              const GaussianSymbol g2 = random_integrable_symbol(rng, n);
              const GaussianKernel lhs = kernel_from_weyl(sharp_product(g1, g2));
              const GaussianKernel rhs = compose_kernels(kernel_from_weyl(g1), kernel_from_weyl(g2));
              worst = std::max(worst, kernel_gap(lhs, rhs));
            }
            return worst;
          },
          1e-9);
  r.bound("associativity_20_triples",
          [&rng] {
            double worst = 0.0;
            for (int i = 0; i < 20; ++i) {
              const int n = 1 + i % 3;
              const GaussianSymbol a = random_integrable_symbol(rng, n);
              const GaussianSymbol b = random_integrable_symbol(rng, n);
              const GaussianSymbol c = random_integrable_symbol(rng, n);
              worst = std::max(worst, symbol_gap(sharp_product(sharp_product(a, b), c),
                                                 sharp_product(a, sharp_product(b, c))));
            }
            return worst;
          },
          1e-8);
  r.bound("davies_kernels_form_a_semigroup",
          [] {
            const GaussianKernel kt = kernel_from_weyl(davies_mehler(pi / 4, {0.4, 0.1}));
            const GaussianKernel ks = kernel_from_weyl(davies_mehler(pi / 4, {0.3, -0.2}));
            const GaussianKernel sum = kernel_from_weyl(davies_mehler(pi / 4, {0.7, -0.1}));
            return kernel_gap(compose_kernels(kt, ks), sum);
          },
          1e-9);
  r.bound("projection_squares_to_itself",
          [] {
            const GaussianSymbol half(1.0, 2.0 * ComplexMatrix::Identity(2, 2));
            const GaussianSymbol quarter(0.5, 2.0 * ComplexMatrix::Identity(2, 2));
            return symbol_gap(sharp_product(half, half), quarter);
          },
          1e-14);
  r.bound("davies_gram_closed_form_5x5",
          [] {
            double worst = 0.0;
            for (int i = 0; i < 5; ++i) {
              for (int j = 0; j < 5; ++j) {
                const double th = -1.2 + 2.4 * i / 4.0;
                const Complex t(0.3 + 0.4 * j, 0.1 * (j - i));
                if (!region_report(th, t).bounded) continue;
                const DaviesGram dg = davies_gram_symbol(th, t);
                const GaussianSymbol generic = gram_product(davies_mehler(th, t));
                worst = std::max(worst, symbol_gap(dg.symbol(), generic));
                const double a = davies_norm(th, t).A;
                worst = std::max(worst, std::abs(dg.det_f - a / (1.0 + a)));
              }
            }
            return worst;
          },
          1e-12);
}

void embedding_suite(std::ostream& out, VerifyReport& report) {
  Runner r("embedding", out, report);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  r.check("b_0_a_4", [] { return *embedding_norm(4.0, 0.0).norm; }, 0.5, 1e-15, true);
  r.check("edge_a_2_b_1", [] { return *embedding_norm(2.0, 1.0).norm; }, std::pow(2.0, -0.25), 1e-15, true);
  r.check("gamma_star_a_2_b_half", [] { return *embedding_norm(2.0, 0.5).gamma_star; },
          -2.75 + std::sqrt(6.5625), 1e-14, false);
  r.check("scan_a_2_b_half", [] { return gaussian_scan_embedding(2.0, 0.5).norm; },
          *embedding_norm(2.0, 0.5).norm, 1e-6, true);
  r.bound("scan_vs_closed_form_50_pairs",
          [&] {
            double worst = 0.0;
            for (int i = 0; i < 50; ++i) {
              const double b = 3.0 * unit(rng);
              const double a = b + 1.0 + 4.0 * unit(rng);
              const EmbeddingResult e = embedding_norm(a, b);
              const EmbeddingScan s = gaussian_scan_embedding(a, b);
              worst = std::max({worst, std::abs(s.norm - *e.norm), std::abs(s.gamma_star - *e.gamma_star),
                                std::max(0.0, s.grid_max - s.norm - 1e-8)});
            }
            return worst;
          },
          1e-6);
  r.bound("fock_quadrature_10_weights",
          [&] {
            double worst = 0.0;
            for (int i = 0; i < 10; ++i) {
              const double alpha = 0.3 + unit(rng);
              const Complex beta = std::polar(0.4 * alpha * unit(rng), 2 * pi * unit(rng));
              const Complex gamma = std::polar(0.5 * unit(rng), 2 * pi * unit(rng));
              const FockQuadrature f = fock_norm_quadrature(gamma, {alpha, beta});
              worst = std::max(worst, std::abs(f.integral - f.closed_form) / f.closed_form);
            }
            return worst;
          },
          1e-7);
  r.check("fock_normalized_gamma_0.5", [] { return *fock_norm_quadrature(0.5, {0.5, 0.0}).normalized; },
          std::sqrt(pi * 0.5) / std::sqrt(0.75), 1e-8, true);
  r.check("fock_ratio_a_2_b_half_gamma_0.3-0.2i",
          [] {
            const Complex g(0.3, -0.2);
            const double i1 = fock_norm_quadrature(g, {0.5, 0.0}).integral;
            const double i2 = fock_norm_quadrature(g, {1.0, -0.25}).integral;
            return std::sqrt(i2 / i1);
          },
          embedding_ratio({0.3, -0.2}, 2.0, 0.5), 1e-8, true);
  r.bound("davies_weights_reduce",
          [] {
            const double th = 0.6;
            const Complex t(0.4, 0.3);
            const HolomorphicWeight w = HolomorphicWeight::davies(th);
            const WeightPair p = weight_reduce(w, w.dilated(std::exp(2.0 * t)));
            const WeightPair q = davies_to_embedding(th, t);
            return std::max(std::abs(p.a - q.a), std::abs(p.b - q.b));
          },
          1e-13);
  r.bound("davies_norm_equals_scaled_embedding_norm",
          [] {
            double worst = 0.0;
            for (double th : {0.0, 0.4, 0.9, 1.3}) {
              for (Complex t : {Complex(0.3, 0.0), Complex(0.8, 0.4), Complex(1.5, -1.0)}) {
                if (!region_report(th, t).bounded) continue;
                const WeightPair p = davies_to_embedding(th, t);
                const double lhs = davies_norm(th, t).norm;
                worst = std::max(worst, std::abs(lhs - std::exp(t.real()) * *embedding_norm(p.a, p.b).norm));
              }
            }
            return worst;
          },
          1e-12);
  r.bound("inverse_parameterization_round_trip",
          [] {
            const DaviesParameters d = embedding_to_davies(2.0, 0.5);
            const WeightPair p = davies_to_embedding(d.theta, d.t);
            return std::max(std::abs(p.a - 2.0), std::abs(p.b - 0.5));
          },
          1e-13);
}

void general_suite(std::ostream& out, VerifyReport& report) {
  Runner r("general", out, report);
  for (Complex rr : {Complex(0.5, 0.0), Complex(2.0, 0.0), Complex(0.3, 1.7), Complex(1.0, -0.5)}) {
    char name[64];
    std::snprintf(name, sizeof name, "gaussian_r_%g%+gi", rr.real(), rr.imag());
    r.check(name, [rr] { return general_gaussian_norm(GaussianSymbol(1.0, 2.0 * rr * ComplexMatrix::Identity(2, 2))); },
            1.0 / std::abs(1.0 + rr), 1e-12, true);
  }
  r.check("harmonic_oscillator_t_1",
          [] { return semigroup_norm(QuadraticForm::from_coefficients(1.0, 0.0, 1.0), 1.0); }, std::exp(-1.0),
          1e-12, true);
  r.check("davies_pi/6_t_0.4", [] { return semigroup_norm(QuadraticForm::davies(pi / 6), 0.4); },
          davies_norm(pi / 6, 0.4).norm, 1e-12, true);
  r.check("tensor_product_n_2",
          [] {
            ComplexMatrix a = ComplexMatrix::Zero(4, 4);
            a(0, 0) = a(2, 2) = 2.0 * 0.4;
            a(1, 1) = a(3, 3) = 2.0 * 1.5;
            return general_gaussian_norm(GaussianSymbol(1.0, a));
          },
          1.0 / (1.4 * 2.5), 1e-12, true);
  r.check("ho_action_r_1+i_k_2",
          [] {
            const GaussianSymbol g(1.0, 2.0 * Complex(1.0, 1.0) * ComplexMatrix::Identity(2, 2));
            return std::abs(hermite_galerkin_matrix(kernel_from_weyl(g), 64)(2, 2) - ho_action({1.0, 1.0}, 2));
          },
          0.0, 1e-8, false);
  {
    std::mt19937_64 rng(99);
    const QuadraticForm q = random_elliptic_form(rng, 2);
    r.check("coupled_n_2_galerkin_N_40", [&q] { return hermite_galerkin_norm(q, 0.5, 40); },
            semigroup_norm(q, 0.5), 1e-5, true);
  }
  r.check("susy_identity_t_2", [] { return supersymmetric_norm(ComplexMatrix::Identity(1, 1), 2.0); },
          std::exp(-1.0), 1e-15, true);
  r.check("susy_fokker_planck_t_1",
          [] {
            ComplexMatrix m(2, 2);
            m << 0.0, -1.0, 1.0, 1.0;
            return supersymmetric_norm(m, 1.0);
          },
          std::exp(-0.5), 1e-15, true);
  {
    ComplexMatrix m(2, 2);
    m << 0.5, -1.0, 1.0, 1.0;
    r.check("susy_vs_semigroup_regularized_fokker_planck_t_0.8",
            [m] { return semigroup_norm(supersymmetric_form(m), 0.8); }, supersymmetric_norm(m, 0.8), 1e-8,
            true);
  }
}

}  // namespace

VerifyReport run_verify(std::string_view suite, std::ostream& out, const VerifyOptions& options) {
  if (!is_suite_name(suite)) throw Error(Errc::kInvalidArgument, "unknown suite " + std::string(suite));
  VerifyReport report;
  const bool all = suite == "all";
  if (all || suite == "davies") davies_suite(out, report, options);
  if (all || suite == "sharp") sharp_suite(out, report);
  if (all || suite == "embedding") embedding_suite(out, report);
  if (all || suite == "general") general_suite(out, report);
  out << report.cases.size() - report.failures() << "/" << report.cases.size() << " cases passed\n";
  return report;
}

}  // namespace gaussnorm
