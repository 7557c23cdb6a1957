#include "gaussnorm/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/SVD>

#include "branch.hpp"
#include "gaussnorm/config.hpp"
#include "gaussnorm/error.hpp"
#include "gaussnorm/mehler.hpp"

namespace gaussnorm {

using std::numbers::pi;

namespace {

constexpr double kExpCeiling = 700.0;

double min_real_part_eig(const ComplexMatrix& m) {
  const RealMatrix re = 0.5 * (m.real() + m.real().transpose());
  return sym_eig(re).values(0);
}

// det(p)^{-1/2} continued along Re p + i s Im p from the positive root at
// s = 0; the path stays invertible while Re p is positive definite.
Complex inv_sqrt_det(const ComplexMatrix& p) {
  const ComplexMatrix re = p.real().cast<Complex>();
  const ComplexMatrix im = p.imag().cast<Complex>();
  detail::ContinuedSqrt root([&](double s) { return determinant(re + kI * s * im); });
  return 1.0 / root.run(kTol.branch_steps);
}

bool real_part_pd(const ComplexMatrix& m) {
  return min_real_part_eig(m) > kTol.pd_rel * std::max(1.0, max_abs(m));
}

ComplexVector generic_start(Eigen::Index size) {
  // seeded noise: no structured subspace is missed, whatever the grid
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> nd;
  ComplexVector v(size);
  for (Eigen::Index i = 0; i < size; ++i) v(i) = Complex(nd(rng), nd(rng));
  return v.normalized();
}

// Largest eigenvalues of m* m, each found by power iteration restricted to
// the orthogonal complement of the previous eigenvectors.
std::vector<double> top_singular_values(const ComplexMatrix& m, int count) {
  std::vector<ComplexVector> found;
  std::vector<double> values;
  const auto project = [&found](ComplexVector& v) {
    for (const ComplexVector& u : found) v -= u * u.dot(v);
  };
  constexpr int kMaxIter = 50000;
  for (int c = 0; c < count; ++c) {
    ComplexVector v = generic_start(m.cols());
    project(v);
    v.normalize();
    double lambda = -1.0;
    bool converged = false;
    for (int it = 0; it < kMaxIter; ++it) {
      ComplexVector w = m.adjoint() * (m * v);
      project(w);
      const double next = v.dot(w).real();
      const double wn = w.norm();
      if (wn == 0.0) {
        lambda = 0.0;
        converged = true;
        break;
      }
      v = w / wn;
      if (it > 2 && std::abs(next - lambda) <= 1e-13 * std::abs(next)) {
        lambda = next;
        converged = true;
        break;
      }
      lambda = next;
    }
    if (!converged) {
      throw Error(Errc::kNoConvergence, "kernel power iteration hit the iteration cap",
                  std::sqrt(std::max(lambda, 0.0)));
    }
    const double sigma = std::sqrt(std::max(lambda, 0.0));
    if (!values.empty() && sigma > values.back() * (1.0 + 1e-8)) {
      throw Error(Errc::kNoConvergence, "deflated power iteration lost the ordering", sigma);
    }
    values.push_back(sigma);
    found.push_back(v);
  }
  return values;
}

ComplexMatrix discretize(const GaussianKernel& k, const KernelGrid& grid) {
  if (grid.points < 2 || !(grid.half_width > 0.0)) {
    throw Error(Errc::kInvalidArgument, "kernel grid needs points >= 2 and half_width > 0");
  }
  const int n = k.n;
  Eigen::Index total = 1;
  for (int i = 0; i < n; ++i) total *= grid.points;
  if (total > 6400) throw Error(Errc::kInvalidArgument, "kernel grid exceeds 6400 nodes");

  const double h = 2.0 * grid.half_width / (grid.points - 1);
  RealMatrix nodes(n, total);
  RealVector sqrt_w(total);
  for (Eigen::Index a = 0; a < total; ++a) {
    Eigen::Index rest = a;
    double w = 1.0;
    for (int d = n - 1; d >= 0; --d) {
      const Eigen::Index i = rest % grid.points;
      rest /= grid.points;
      nodes(d, a) = -grid.half_width + static_cast<double>(i) * h;
      w *= (i == 0 || i == grid.points - 1) ? 0.5 * h : h;
    }
    sqrt_w(a) = std::sqrt(w);
  }
  const ComplexMatrix exx = k.exponent.topLeftCorner(n, n);
  const ComplexMatrix exy = k.exponent.topRightCorner(n, n);
  const ComplexMatrix eyy = k.exponent.bottomRightCorner(n, n);
  const ComplexMatrix xc = nodes.cast<Complex>();
  const ComplexMatrix cross = xc.transpose() * exy * xc;
  ComplexVector qx(total), qy(total);
  for (Eigen::Index a = 0; a < total; ++a) {
    qx(a) = xc.col(a).dot(exx * xc.col(a));
    qy(a) = xc.col(a).dot(eyy * xc.col(a));
  }
  ComplexMatrix m(total, total);
  for (Eigen::Index b = 0; b < total; ++b) {
    for (Eigen::Index a = 0; a < total; ++a) {
      const Complex ex = -0.5 * (qx(a) + 2.0 * cross(a, b) + qy(b));
      m(a, b) = k.prefactor * std::exp(ex) * (sqrt_w(a) * sqrt_w(b));
    }
  }
  return m;
}

}  // namespace

Complex GaussianKernel::operator()(const RealVector& x, const RealVector& y) const {
  if (x.size() != n || y.size() != n) throw Error(Errc::kDimensionMismatch, "kernel argument size");
  ComplexVector v(2 * n);
  v << x.cast<Complex>(), y.cast<Complex>();
  return prefactor * std::exp(-0.5 * v.dot(exponent * v));
}

GaussianKernel kernel_from_weyl(const GaussianSymbol& g) {
  const int n = g.n();
  const ComplexMatrix& a = g.exponent();
  const ComplexMatrix axx = a.topLeftCorner(n, n);
  const ComplexMatrix aix = a.bottomLeftCorner(n, n);
  const ComplexMatrix p = a.bottomRightCorner(n, n);
  if (!real_part_pd(p)) {
    throw Error(Errc::kNonIntegrableFiber, "xi-xi block of Re A is not positive definite");
  }
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix mid(n, 2 * n);
  mid << 0.5 * id, 0.5 * id;
  ComplexMatrix diff(n, 2 * n);
  diff << kI * id, -kI * id;
  // w = i (x - y) - A_xi,x m, the linear coefficient of the fiber integral
  const ComplexMatrix l = diff - aix * mid;
  const ComplexMatrix e = mid.transpose() * axx * mid - l.transpose() * solve(p, l);

  GaussianKernel k;
  k.n = n;
  k.prefactor = g.prefactor() * std::pow(2.0 * pi, -0.5 * n) * inv_sqrt_det(p);
  k.exponent = symmetrize(e);
  return k;
}

GaussianKernel compose_kernels(const GaussianKernel& k1, const GaussianKernel& k2) {
  if (k1.n != k2.n) throw Error(Errc::kDimensionMismatch, "kernels act on different dimensions");
  const int n = k1.n;
  const ComplexMatrix& e1 = k1.exponent;
  const ComplexMatrix& e2 = k2.exponent;
  const ComplexMatrix mww = e1.bottomRightCorner(n, n) + e2.topLeftCorner(n, n);
  if (!real_part_pd(mww)) {
    throw Error(Errc::kNonIntegrableComposition, "intermediate variable block is not integrable");
  }
  ComplexMatrix goo = ComplexMatrix::Zero(2 * n, 2 * n);
  goo.topLeftCorner(n, n) = e1.topLeftCorner(n, n);
  goo.bottomRightCorner(n, n) = e2.bottomRightCorner(n, n);
  ComplexMatrix gow(2 * n, n);
  gow << e1.topRightCorner(n, n), e2.bottomLeftCorner(n, n);
  const ComplexMatrix e = goo - gow * solve(mww, gow.transpose());

  GaussianKernel k;
  k.n = n;
  k.prefactor = k1.prefactor * k2.prefactor * std::pow(2.0 * pi, 0.5 * n) * inv_sqrt_det(mww);
  k.exponent = symmetrize(e);
  return k;
}

GaussianKernel adjoint_kernel(const GaussianKernel& k) {
  const int n = k.n;
  const ComplexMatrix& e = k.exponent;
  GaussianKernel out;
  out.n = n;
  out.prefactor = std::conj(k.prefactor);
  out.exponent.resize(2 * n, 2 * n);
  out.exponent.topLeftCorner(n, n) = e.bottomRightCorner(n, n).conjugate();
  out.exponent.topRightCorner(n, n) = e.bottomLeftCorner(n, n).conjugate();
  out.exponent.bottomLeftCorner(n, n) = e.topRightCorner(n, n).conjugate();
  out.exponent.bottomRightCorner(n, n) = e.topLeftCorner(n, n).conjugate();
  return out;
}

KernelGrid suggested_grid(const GaussianKernel& k) {
  KernelGrid g;
  const int n = k.n;
  double decay = min_real_part_eig(k.exponent);
  if (!(decay > 1e-3 * max_abs(k.exponent))) {
    decay = std::min(min_real_part_eig(k.exponent.topLeftCorner(n, n)),
                     min_real_part_eig(k.exponent.bottomRightCorner(n, n)));
  }
  if (decay > 0.0) g.half_width = std::clamp(std::sqrt(80.0 / decay), g.half_width, 40.0);

  double h = 2.0 * g.half_width / (g.points - 1);
  try {
    const ComplexMatrix inv = solve(k.exponent, ComplexMatrix::Identity(2 * n, 2 * n));
    const double smooth = min_real_part_eig(symmetrize(inv));
    if (smooth > 0.0) h = std::min(h, 2.0 * pi * std::sqrt(smooth / 72.0));
  } catch (const Error&) {
  }
  const int cap = n == 1 ? 1600 : 40;
  const int points = static_cast<int>(std::ceil(2.0 * g.half_width / h)) + 1;
  g.points = std::clamp(points, n == 1 ? 400 : 20, cap);
  return g;
}

KernelSvdResult kernel_svd_norm(const GaussianKernel& k, const KernelGrid& grid, int count,
                                double tolerance) {
  if (count < 1) throw Error(Errc::kInvalidArgument, "count must be positive");
  const double coarse = top_singular_values(discretize(k, grid), 1).front();
  KernelGrid fine = grid;
  fine.points = 2 * grid.points;
  KernelSvdResult r;
  r.grid = fine;
  r.singular_values = top_singular_values(discretize(k, fine), count);
  r.norm = r.singular_values.front();
  r.doubling_change = std::abs(r.norm - coarse) / r.norm;
  if (!(r.doubling_change <= tolerance)) {
    std::ostringstream os;
    os << "norm moved from " << coarse << " to " << r.norm << " when doubling to " << fine.points
       << " points";
    throw Error(Errc::kGridTooCoarse, os.str(), r.doubling_change);
  }
  return r;
}

RealMatrix hermite_functions(const RealVector& x, int count) {
  RealMatrix h(x.size(), std::max(count, 0));
  if (count <= 0) return h;
  const double c0 = std::pow(pi, -0.25);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    h(i, 0) = c0 * std::exp(-0.5 * x(i) * x(i));
    if (count > 1) h(i, 1) = std::sqrt(2.0) * x(i) * h(i, 0);
    for (int k = 1; k + 1 < count; ++k) {
      h(i, k + 1) = std::sqrt(2.0 / (k + 1)) * x(i) * h(i, k) - std::sqrt(static_cast<double>(k) / (k + 1)) * h(i, k - 1);
    }
  }
  return h;
}

GaussHermiteRule gauss_hermite(int order) {
  if (order < 1) throw Error(Errc::kInvalidArgument, "Gauss-Hermite order must be positive");
  RealVector diag = RealVector::Zero(order);
  RealVector sub(std::max(order - 1, 0));
  for (int k = 1; k < order; ++k) sub(k - 1) = std::sqrt(0.5 * k);
  GaussHermiteRule rule;
  if (order == 1) {
    rule.nodes = RealVector::Zero(1);
    rule.weights = RealVector::Constant(1, std::sqrt(pi));
  } else {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    rule.nodes = es.eigenvalues();
    rule.weights = std::sqrt(pi) * es.eigenvectors().row(0).transpose().array().square();
  }
  const RealMatrix h = hermite_functions(rule.nodes, order);
  rule.plain_weights = h.rowwise().squaredNorm().cwiseInverse();
  return rule;
}

ComplexMatrix hermite_galerkin_matrix(const GaussianKernel& k, int N) {
  const int n = k.n;
  if (n != 1 && n != 2) throw Error(Errc::kInvalidArgument, "Galerkin oracle supports n = 1, 2");
  if (N < 1 || N > (n == 1 ? 128 : 40)) {
    throw Error(Errc::kInvalidArgument, "Galerkin size out of range");
  }
  const int q = 2 * N;
  const GaussHermiteRule rule = gauss_hermite(q);
  const RealVector& x = rule.nodes;
  const RealMatrix h = hermite_functions(x, N);
  const ComplexMatrix phi = (rule.plain_weights.asDiagonal() * h).cast<Complex>();

  const auto entry = [&k](const Complex ex) {
    if (ex.real() > kExpCeiling) {
      throw Error(Errc::kQuadratureOverflow, "kernel exponent overflows at a quadrature node",
                  ex.real());
    }
    return k.prefactor * std::exp(ex);
  };

  ComplexMatrix m;
  if (n == 1) {
    const Complex exx = k.exponent(0, 0), exy = k.exponent(0, 1), eyy = k.exponent(1, 1);
    ComplexMatrix kmat(q, q);
    for (int b = 0; b < q; ++b) {
      for (int a = 0; a < q; ++a) {
        kmat(a, b) = entry(-0.5 * (exx * x(a) * x(a) + 2.0 * exy * x(a) * x(b) + eyy * x(b) * x(b)));
      }
    }
    m = phi.transpose() * kmat * phi;
  } else {
    const ComplexMatrix exx = k.exponent.topLeftCorner(2, 2);
    const ComplexMatrix exy = k.exponent.topRightCorner(2, 2);
    const ComplexMatrix eyy = k.exponent.bottomRightCorner(2, 2);
    const auto quad = [&x, q](const ComplexMatrix& e) {
      ComplexMatrix out(q, q);
      for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
          out(i, j) = -0.5 * (e(0, 0) * x(i) * x(i) + 2.0 * e(0, 1) * x(i) * x(j) + e(1, 1) * x(j) * x(j));
        }
      }
      return out;
    };
    const ComplexMatrix qx = quad(exx);
    const ComplexMatrix qy = quad(eyy);
    const ComplexMatrix phit = phi.transpose();
    // first contraction over y, one x node at a time: T(a, (k1, k2))
    ComplexMatrix t(q * q, N * N);
    ComplexMatrix r(q, q);
    for (int a1 = 0; a1 < q; ++a1) {
      for (int a2 = 0; a2 < q; ++a2) {
        const Complex u1 = exy(0, 0) * x(a1) + exy(1, 0) * x(a2);
        const Complex u2 = exy(0, 1) * x(a1) + exy(1, 1) * x(a2);
        const Complex c0 = qx(a1, a2);
        for (int b2 = 0; b2 < q; ++b2) {
          for (int b1 = 0; b1 < q; ++b1) {
            r(b1, b2) = entry(c0 + qy(b1, b2) - u1 * x(b1) - u2 * x(b2));
          }
        }
        const ComplexMatrix s = phit * r * phi;
        const int row = a1 * q + a2;
        for (int k2 = 0; k2 < N; ++k2) {
          for (int k1 = 0; k1 < N; ++k1) t(row, k1 * N + k2) = s(k1, k2);
        }
      }
    }
    // second contraction over x, one output column at a time
    m.resize(N * N, N * N);
    ComplexMatrix col(q, q);
    for (int c = 0; c < N * N; ++c) {
      for (int a2 = 0; a2 < q; ++a2) {
        for (int a1 = 0; a1 < q; ++a1) col(a1, a2) = t(a1 * q + a2, c);
      }
      const ComplexMatrix s = phit * col * phi;
      for (int j2 = 0; j2 < N; ++j2) {
        for (int j1 = 0; j1 < N; ++j1) m(j1 * N + j2, c) = s(j1, j2);
      }
    }
  }
  if (!m.allFinite()) throw Error(Errc::kQuadratureOverflow, "non-finite Galerkin matrix entry");
  return m;
}

double hermite_galerkin_norm(const GaussianSymbol& g, int N) {
  const ComplexMatrix m = hermite_galerkin_matrix(kernel_from_weyl(g), N);
  if (g.n() == 1) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
  }
  return spectral_norm(m, 1e-14, 200000);
}

double hermite_galerkin_norm(const QuadraticForm& q, double t, int N) {
  return hermite_galerkin_norm(mehler_symbol(q, t), N);
}

FockQuadrature fock_norm_quadrature(Complex gamma, const HolomorphicWeight& w, const FockGrid& grid) {
  // exponent -v.S v in v = (Re z, Im z), from 2 alpha |z|^2 + Re((gamma + 2 beta) z^2)
  const Complex c = gamma + 2.0 * w.beta;
  const double lam_min = 2.0 * w.alpha - std::abs(c);
  const double lam_max = 2.0 * w.alpha + std::abs(c);
  if (!(lam_min > 0.0)) {
    std::ostringstream os;
    os << "2 alpha = " << 2.0 * w.alpha << " does not exceed |2 beta + gamma| = " << std::abs(c);
    throw Error(Errc::kDivergent, os.str(), lam_min);
  }
  const double s11 = 2.0 * w.alpha + c.real();
  const double s22 = 2.0 * w.alpha - c.real();
  const double s12 = -c.imag();

  double half = grid.half_width;
  if (!(half > 0.0)) half = std::sqrt(40.0 / lam_min);
  int points = grid.points;
  if (points <= 0) {
    const double h = pi / std::sqrt(30.0 * lam_max);
    points = std::clamp(static_cast<int>(std::ceil(2.0 * half / h)) + 1, 201, 4001);
  }
  const double h = 2.0 * half / (points - 1);
  std::vector<double> nodes(points), weights(points);
  for (int i = 0; i < points; ++i) {
    nodes[i] = -half + i * h;
    weights[i] = (i == 0 || i == points - 1) ? 0.5 * h : h;
  }
  double sum = 0.0;
  for (int j = 0; j < points; ++j) {
    const double y = nodes[j];
    double row = 0.0;
    for (int i = 0; i < points; ++i) {
      const double xv = nodes[i];
      row += weights[i] * std::exp(-(s11 * xv * xv + 2.0 * s12 * xv * y + s22 * y * y));
    }
    sum += weights[j] * row;
  }
  FockQuadrature r;
  r.integral = sum;
  r.closed_form = pi / std::sqrt(lam_min * lam_max);
  if (gamma.real() > 0.0) {
    const double scale = std::sqrt(gamma.real() / pi);
    r.normalized = scale * r.integral;
    r.normalized_closed_form = scale * r.closed_form;
  }
  return r;
}

double embedding_ratio(Complex gamma, double a, double b) {
  const double num = 1.0 - std::norm(gamma);
  const double den = a * a - std::norm(b - gamma);
  return std::pow(num / den, 0.25);
}

double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  // the endpoints are candidates too: maximizers may sit on the boundary
  double best = 0.5 * (a + b);
  double fbest = f(best);
  for (double cand : {lo, hi}) {
    const double v = f(cand);
    if (v > fbest) {
      fbest = v;
      best = cand;
    }
  }
  return best;
}

EmbeddingScan gaussian_scan_embedding(double a, double b) {
  if (!(b >= 0.0) || !(a - b >= 1.0 - kTol.boundary_band)) {
    throw Error(Errc::kInvalidArgument, "Gaussian scan needs b >= 0 and a - b >= 1");
  }
  EmbeddingScan s;
  s.grid_max = -1.0;
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const Complex g(-1.0 + 0.05 * j, -1.0 + 0.05 * i);
      if (!(std::abs(g) < 1.0)) continue;
      const double v = embedding_ratio(g, a, b);
      if (v > s.grid_max) {
        s.grid_max = v;
        s.grid_argmax = g;
      }
    }
  }
  const double edge = 1.0 - 1e-9;
  const auto f = [a, b](double g) {
    return (1.0 - g * g) / (a * a - (b - g) * (b - g));
  };
  s.gamma_star = golden_section_max(f, -edge, edge, 1e-12);
  s.norm = embedding_ratio(s.gamma_star, a, b);
  return s;
}

}  // namespace gaussnorm
