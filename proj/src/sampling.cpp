#include "gaussnorm/sampling.hpp"

namespace gaussnorm {

namespace {

RealMatrix gaussian_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c, double scale) {
  std::normal_distribution<double> nd(0.0, scale);
  RealMatrix m(r, c);
  for (Eigen::Index j = 0; j < c; ++j) {
    for (Eigen::Index i = 0; i < r; ++i) m(i, j) = nd(rng);
  }
  return m;
}

RealMatrix symmetric(const RealMatrix& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

GaussianSymbol random_integrable_symbol(std::mt19937_64& rng, int n, double floor,
                                        double imag_scale) {
  const int d = 2 * n;
  const RealMatrix b = gaussian_matrix(rng, d, d, 0.5);
  const RealMatrix re = b * b.transpose() + floor * RealMatrix::Identity(d, d);
  const RealMatrix im = symmetric(gaussian_matrix(rng, d, d, imag_scale));
  ComplexMatrix a(d, d);
  a.real() = re;
  a.imag() = im;
  std::normal_distribution<double> nd(0.0, 1.0);
  const Complex c(1.0 + 0.3 * nd(rng), 0.3 * nd(rng));
  return GaussianSymbol(c, a);
}

QuadraticForm random_elliptic_form(std::mt19937_64& rng, int n, double coupling, double imag_scale) {
  const int d = 2 * n;
  RealMatrix re;
  do {
    re = RealMatrix::Identity(d, d) + coupling * symmetric(gaussian_matrix(rng, d, d, 1.0));
  } while (sym_eig(re).values(0) < 0.25);
  const RealMatrix im = symmetric(gaussian_matrix(rng, d, d, imag_scale));
  ComplexMatrix h(d, d);
  h.real() = 2.0 * re;
  h.imag() = 2.0 * im;
  return QuadraticForm(h);
}

}  // namespace gaussnorm
