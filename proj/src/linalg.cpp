#include "gaussnorm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gaussnorm/config.hpp"
#include "gaussnorm/error.hpp"

namespace gaussnorm {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kSingularMatrix: return "SingularMatrix";
    case Errc::kNotSymmetric: return "NotSymmetric";
    case Errc::kSingularCosine: return "SingularCosine";
    case Errc::kNoConvergence: return "NoConvergence";
    case Errc::kNotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::kNotPositive: return "NotPositive";
    case Errc::kPoleAtGamma: return "PoleAtGamma";
    case Errc::kExceptionalTime: return "ExceptionalTime";
    case Errc::kNotElliptic: return "NotElliptic";
    case Errc::kCharacterizationMismatch: return "CharacterizationMismatch";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kNotIntegrable: return "NotIntegrable";
    case Errc::kSingularD: return "SingularD";
    case Errc::kOutsideRegion: return "OutsideRegion";
    case Errc::kUnbounded: return "Unbounded";
    case Errc::kNotOscillatorType: return "NotOscillatorType";
    case Errc::kNotPlurisubharmonic: return "NotPlurisubharmonic";
    case Errc::kInternalContractViolation: return "InternalContractViolation";
    case Errc::kNonIntegrableFiber: return "NonIntegrableFiber";
    case Errc::kNonIntegrableComposition: return "NonIntegrableComposition";
    case Errc::kGridTooCoarse: return "GridTooCoarse";
    case Errc::kQuadratureOverflow: return "QuadratureOverflow";
    case Errc::kDivergent: return "Divergent";
    case Errc::kGridGuard: return "GridGuard";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(Errc::kDimensionMismatch, std::string(what) + ": matrix must be square and non-empty");
  }
}

double one_norm(const ComplexMatrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

RealMatrix symplectic_j(int n) {
  RealMatrix j = RealMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -RealMatrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = RealMatrix::Identity(n, n);
  return j;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

ComplexMatrix symmetrize(const ComplexMatrix& m) {
  return 0.5 * (m + m.transpose());
}

Complex determinant(const ComplexMatrix& m) {
  require_square(m, "determinant");
  return Eigen::PartialPivLU<ComplexMatrix>(m).determinant();
}

ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& rhs) {
  require_square(m, "solve");
  if (rhs.rows() != m.rows()) {
    throw Error(Errc::kDimensionMismatch, "solve: rhs row count differs from matrix size");
  }
  const Eigen::PartialPivLU<ComplexMatrix> lu(m);
  const double scale = max_abs(m);
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (scale == 0.0 || min_pivot < kTol.pivot_rel * scale) {
    std::ostringstream os;
    os << "pivot " << min_pivot << " below " << kTol.pivot_rel << " * " << scale;
    throw Error(Errc::kSingularMatrix, os.str());
  }
  return lu.solve(rhs);
}

SymEig sym_eig(const RealMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(Errc::kDimensionMismatch, "sym_eig: matrix must be square and non-empty");
  }
  const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > kTol.symmetry_rel * scale) {
    throw Error(Errc::kNotSymmetric, "relative asymmetry " + std::to_string(asym / scale));
  }
  const RealMatrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix mat_exp(const ComplexMatrix& m) {
  require_square(m, "mat_exp");
  // Higham (2005) coefficients for the [13/13] approximant, divided by b_0.
  static constexpr double b[] = {1.0,
                                 0.5,
                                 0.12,
                                 1.833333333333333333e-2,
                                 1.992753623188405797e-3,
                                 1.630434782608695652e-4,
                                 1.035196687370600414e-5,
                                 5.175983436853002070e-7,
                                 2.043151356652500817e-8,
                                 6.306022705717595115e-10,
                                 1.483770048404140027e-11,
                                 2.529153491597965955e-13,
                                 2.810170546219962173e-15,
                                 1.544049750670308886e-17};
  static constexpr double kTheta13 = 5.371920351148152;

  const auto n = m.rows();
  const double norm = one_norm(m);
  int squarings = 0;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  }
  const ComplexMatrix a = m / std::ldexp(1.0, squarings);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;

  const ComplexMatrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                                b[3] * a2 + b[1] * id;
  const ComplexMatrix u = a * u_inner;
  const ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                          b[2] * a2 + b[0] * id;

  ComplexMatrix r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) {
    r = r * r;
  }
  return r;
}

MatTrig mat_trig(const ComplexMatrix& f) {
  require_square(f, "mat_trig");
  const ComplexMatrix ep = mat_exp(kI * f);
  const ComplexMatrix em = mat_exp(-kI * f);
  MatTrig out;
  out.cos = 0.5 * (ep + em);
  out.sin = (ep - em) / (2.0 * kI);
  try {
    out.tan = solve(out.cos, out.sin);
  } catch (const Error& e) {
    throw Error(Errc::kSingularCosine, e.what());
  }
  return out;
}

double spectral_norm(const ComplexMatrix& m, double rel_tol, int max_iter) {
  if (m.size() == 0) return 0.0;
  const auto cols = m.cols();
  // seeded noise as the start vector
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> nd;
  ComplexVector v(cols);
  for (Eigen::Index i = 0; i < cols; ++i) v(i) = Complex(nd(rng), nd(rng));
  v.normalize();

  double sigma = (m * v).norm();
  if (sigma == 0.0) {
    // Start vector may lie in the kernel; fall back to the column norms.
    sigma = m.colwise().norm().maxCoeff();
    if (sigma == 0.0) return 0.0;
    Eigen::Index best = 0;
    m.colwise().norm().maxCoeff(&best);
    v.setZero();
    v(best) = 1.0;
  }
  for (int it = 0; it < max_iter; ++it) {
    const ComplexVector w = m * v;
    ComplexVector z = m.adjoint() * w;
    const double zn = z.norm();
    if (zn == 0.0) return 0.0;
    v = z / zn;
    const double next = (m * v).norm();
    if (std::abs(next - sigma) <= rel_tol * next) return next;
    sigma = next;
  }
  throw Error(Errc::kNoConvergence, "power iteration hit the iteration cap", sigma);
}

std::vector<double> symplectic_eigenvalues(const RealMatrix& b) {
  if (b.rows() != b.cols() || b.rows() % 2 != 0 || b.rows() == 0) {
    throw Error(Errc::kDimensionMismatch, "symplectic_eigenvalues: need a 2n x 2n matrix");
  }
  const int n = static_cast<int>(b.rows() / 2);
  const SymEig eig = sym_eig(b);
  const double lo = eig.values(0);
  const double hi = eig.values(eig.values.size() - 1);
  if (!(hi > 0.0) || !(lo > kTol.pd_rel * hi)) {
    throw Error(Errc::kNotPositiveDefinite,
                "eigenvalues in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  const RealMatrix root =
      eig.vectors * eig.values.cwiseSqrt().asDiagonal() * eig.vectors.transpose();
  const RealMatrix k = root * symplectic_j(n) * root;
  const RealMatrix ktk = k.transpose() * k;
  const SymEig kk = sym_eig(0.5 * (ktk + ktk.transpose()));
  std::vector<double> s(n);
  for (int j = 0; j < n; ++j) {
    const double pair = 0.5 * (kk.values(2 * j) + kk.values(2 * j + 1));
    s[j] = std::sqrt(std::max(pair, 0.0));
  }
  return s;
}

}  // namespace gaussnorm
