#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussnorm/contour.hpp"
#include "gaussnorm/error.hpp"
#include "gaussnorm/io.hpp"
#include "gaussnorm/mehler.hpp"
#include "gaussnorm/norms.hpp"
#include "gaussnorm/verify.hpp"

namespace {

using namespace gaussnorm;
using nlohmann::json;

constexpr int kFailure = 1;
constexpr int kBadArguments = 2;

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

HolomorphicWeight parse_weight(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(Errc::kInvalidArgument, "weight must be alpha,beta_re,beta_im");
  const Complex beta = parse_complex(text.substr(comma + 1));
  return {parse_complex(text.substr(0, comma)).real(), beta};
}

int run_davies(double theta, const std::string& t_text, bool as_json) {
  const Complex t = parse_complex(t_text);
  try {
    const DaviesResult r = davies_norm(theta, t);
    if (as_json) {
      std::cout << davies_result_json(r) << '\n';
    } else {
      std::printf("norm           %.15g\n", r.norm);
      std::printf("A              %.15g\n", r.A);
      if (r.phi) std::printf("phi            %.15g\n", *r.phi);
      std::printf("delta          %.15g\n", r.delta);
      std::printf("classification %s\n", std::string(classification_name(r.classification)).c_str());
      std::printf("compact        %s\n", r.compact ? "yes" : "no");
    }
  } catch (const Error& e) {
    if (e.code() != Errc::kUnbounded) throw;
    if (as_json) {
      std::cout << unbounded_result_json() << '\n';
    } else {
      std::cout << "unbounded: " << e.what() << '\n';
    }
  }
  return 0;
}

int run_embedding(double a, double b, const std::string& phi1, const std::string& phi2) {
  EmbeddingResult r;
  if (!phi1.empty() || !phi2.empty()) {
    if (phi1.empty() || phi2.empty()) throw Error(Errc::kInvalidArgument, "--phi1 and --phi2 go together");
    r = embedding_norm(parse_weight(phi1), parse_weight(phi2));
  } else {
    r = embedding_norm(a, b);
  }
  json j;
  j["a"] = r.a;
  j["b"] = r.b;
  j["bounded"] = r.bounded;
  j["gamma_star"] = optional_number(r.gamma_star);
  j["norm"] = optional_number(r.norm);
  std::cout << j.dump() << '\n';
  return 0;
}

int run_region(double theta, const std::string& t_text) {
  const RegionReport r = region_report(theta, parse_complex(t_text));
  json j;
  j["bounded"] = r.bounded;
  j["compact"] = r.compact;
  j["a"] = r.a;
  j["b"] = r.b;
  j["phi"] = optional_number(r.phi);
  j["special_imaginary"] = r.special_imaginary;
  j["algebraic_margin"] = r.algebraic_margin;
  j["geometric_margin"] = std::isfinite(r.geometric_margin) ? json(r.geometric_margin) : json(nullptr);
  std::cout << j.dump() << '\n';
  return 0;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::kInvalidArgument:
    case Errc::kDimensionMismatch:
    case Errc::kNotSymmetric:
      return kBadArguments;
    default:
      return kFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator norms of Gaussian semigroups"};
  app.require_subcommand(1);

  double theta = 0.0;
  std::string t_text;
  bool as_json = false;
  auto* davies = app.add_subcommand("davies", "norm of exp(-tQ_theta)");
  davies->add_option("--theta", theta, "angle in radians")->required();
  davies->add_option("--t", t_text, "complex time re,im")->required();
  davies->add_flag("--json", as_json, "JSON output");

  double a = 0.0, b = 0.0;
  std::string phi1, phi2;
  auto* embedding = app.add_subcommand("embedding", "norm of the embedding between two Fock spaces");
  auto* opt_a = embedding->add_option("--a", a, "ratio of Laplacian coefficients");
  auto* opt_b = embedding->add_option("--b", b, "reduced anisotropy");
  auto* opt_p1 = embedding->add_option("--phi1", phi1, "alpha,beta_re,beta_im");
  auto* opt_p2 = embedding->add_option("--phi2", phi2, "alpha,beta_re,beta_im");
  opt_a->excludes(opt_p1)->excludes(opt_p2);
  opt_b->excludes(opt_p1)->excludes(opt_p2);

  std::string hessian_path;
  double t_real = 0.0;
  auto* norm = app.add_subcommand("norm", "norm of exp(-tQ) for an elliptic quadratic form");
  norm->add_option("--hessian", hessian_path, "JSON file with n, hessian_re, hessian_im")->required();
  norm->add_option("--t", t_real, "positive time")->required();

  auto* region = app.add_subcommand("region", "boundedness of exp(-tQ_theta)");
  region->add_option("--theta", theta, "angle in radians")->required();
  region->add_option("--t", t_text, "complex time re,im")->required();

  std::string re_text, im_text, out_path;
  unsigned threads = 0;
  auto* contour = app.add_subcommand("contour", "log norm on a grid of complex times, as CSV");
  contour->add_option("--theta", theta, "angle in radians")->required();
  contour->add_option("--re", re_text, "start:step:stop for Re t")->default_val("0.01:0.01:1.5");
  contour->add_option("--im", im_text, "start:step:stop for Im t")->default_val("-1:0.01:2");
  contour->add_option("--out", out_path, "output CSV path")->required();
  contour->add_option("--threads", threads, "worker threads (0: all cores)");

  std::string matrix_path;
  auto* susy = app.add_subcommand("susy", "norm for the supersymmetric family");
  susy->add_option("--matrix", matrix_path, "JSON file with re, im")->required();
  susy->add_option("--t", t_text, "complex time re,im")->required();

  std::string suite = "all";
  double perturb = 0.0;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("suite", suite, "all, davies, sharp, embedding or general")
      ->check(CLI::IsMember({"all", "davies", "sharp", "embedding", "general"}));
  verify->add_option("--perturb-a", perturb)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArguments;
  }

  try {
    if (*davies) return run_davies(theta, t_text, as_json);
    if (*embedding) {
      if (phi1.empty() && phi2.empty() && (opt_a->count() == 0 || opt_b->count() == 0)) {
        throw Error(Errc::kInvalidArgument, "give --a and --b, or --phi1 and --phi2");
      }
      return run_embedding(a, b, phi1, phi2);
    }
    if (*norm) {
      const QuadraticForm q = parse_quadratic_form(read_text_file(hessian_path));
      std::printf("%.15g\n", semigroup_norm(q, t_real));
      return 0;
    }
    if (*region) return run_region(theta, t_text);
    if (*contour) {
      ContourJob job;
      job.theta = theta;
      job.re = parse_range(re_text);
      job.im = parse_range(im_text);
      job.out = out_path;
      run_contour(job, threads);
      return 0;
    }
    if (*susy) {
      const ComplexMatrix m = parse_matrix(read_text_file(matrix_path));
      std::printf("%.15g\n", supersymmetric_norm(m, parse_complex(t_text)));
      return 0;
    }
    if (*verify) {
      VerifyOptions options;
      options.perturb_a = perturb;
      return run_verify(suite, std::cout, options).ok() ? 0 : kFailure;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kBadArguments;
}
