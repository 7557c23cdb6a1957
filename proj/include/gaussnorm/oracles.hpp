#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gaussnorm/norms.hpp"
#include "gaussnorm/symbols.hpp"

namespace gaussnorm {

/// K(x, y) = prefactor exp(-1/2 (x, y) . E (x, y)) on R^n x R^n.
struct GaussianKernel {
  int n = 1;
  Complex prefactor;
  ComplexMatrix exponent;  // 2n x 2n, symmetric, order (x, y)

  Complex operator()(const RealVector& x, const RealVector& y) const;
};

/// Integral kernel of the Weyl quantization of g, with the fiber integral
/// over xi done in closed form. Throws kNonIntegrableFiber unless the
/// xi-xi block of Re A is positive definite.
GaussianKernel kernel_from_weyl(const GaussianSymbol& g);

/// Kernel of the composition, int K1(x, w) K2(w, y) dw. Throws
/// kNonIntegrableComposition.
GaussianKernel compose_kernels(const GaussianKernel& k1, const GaussianKernel& k2);

/// conj K(y, x)
GaussianKernel adjoint_kernel(const GaussianKernel& k);

struct KernelGrid {
  double half_width = 8.0;
  int points = 400;  // per axis
};

/// Window and spacing resolving both the decay and the oscillation of k,
/// never smaller than the defaults.
KernelGrid suggested_grid(const GaussianKernel& k);

struct KernelSvdResult {
  double norm = 0.0;
  std::vector<double> singular_values;  // descending, count of them
  KernelGrid grid;                      // the finer of the two grids used
  double doubling_change = 0.0;         // relative change of the norm
};

/// Top `count` singular values of the trapezoid discretization of k, by
/// power iteration on M* M with deflation, computed on `grid` and on twice
/// as many points. Throws kGridTooCoarse if the norm moves by more than
/// `tolerance` (relative) under the doubling.
KernelSvdResult kernel_svd_norm(const GaussianKernel& k, const KernelGrid& grid, int count = 1,
                                double tolerance = 1e-7);

struct GaussHermiteRule {
  RealVector nodes;
  RealVector weights;         // for int f(x) e^{-x^2} dx
  RealVector plain_weights;   // for int f(x) dx, i.e. weights * e^{x^2}
};

/// Golub-Welsch. The plain weights come from 1 / sum_k h_k(x_i)^2, which
/// stays finite at the outer nodes.
GaussHermiteRule gauss_hermite(int order);

/// L^2-normalized Hermite functions h_0..h_{count-1} at the points x
/// (rows: points, columns: k).
RealMatrix hermite_functions(const RealVector& x, int count);

/// <h_j, K h_k> for the first N Hermite functions per axis (n = 1 or 2),
/// with Gauss-Hermite quadrature of order 2N. Throws kQuadratureOverflow.
ComplexMatrix hermite_galerkin_matrix(const GaussianKernel& k, int N);

/// Norm of the N (or N^2) dimensional Galerkin truncation of g^w.
double hermite_galerkin_norm(const GaussianSymbol& g, int N);

/// Same for exp(-t q^w), through the Mehler symbol.
double hermite_galerkin_norm(const QuadraticForm& q, double t, int N);

struct FockGrid {
  double half_width = 0.0;  // 0: chosen from the decay
  int points = 0;           // 0: chosen from the spacing
};

struct FockQuadrature {
  double integral = 0.0;     // int |e^{-gamma z^2/2}|^2 e^{-2 Phi(z)} dA(z)
  double closed_form = 0.0;  // pi / sqrt(4 alpha^2 - |2 beta + gamma|^2)
  // (Re gamma / pi)^{1/2} times the above, for Re gamma > 0
  std::optional<double> normalized;
  std::optional<double> normalized_closed_form;
};

/// Squared weighted norm of the Gaussian e^{-gamma z^2 / 2} by tensor
/// trapezoid quadrature. Throws kDivergent unless 2 alpha > |2 beta + gamma|.
FockQuadrature fock_norm_quadrature(Complex gamma, const HolomorphicWeight& w,
                                    const FockGrid& grid = {});

/// ((1 - |gamma|^2) / (a^2 - |b - gamma|^2))^{1/4}
double embedding_ratio(Complex gamma, double a, double b);

/// Maximizer of f on [lo, hi] for unimodal f.
double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double tol = 1e-12);

struct EmbeddingScan {
  double gamma_star = 0.0;
  double norm = 0.0;
  Complex grid_argmax;
  double grid_max = 0.0;
};

/// Maximizes the Gaussian ratio over real gamma in (-1, 1) after a 41 x 41
/// scan of the unit disc. Throws kInvalidArgument unless a - b >= 1.
EmbeddingScan gaussian_scan_embedding(double a, double b);

}  // namespace gaussnorm
