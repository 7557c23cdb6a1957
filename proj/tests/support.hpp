#pragma once

#include <functional>
#include <random>

#include <doctest.h>

#include "gaussnorm/error.hpp"
#include "gaussnorm/linalg.hpp"

namespace testing {

using gaussnorm::Complex;
using gaussnorm::ComplexMatrix;
using gaussnorm::RealMatrix;

inline ComplexMatrix random_complex(std::mt19937_64& rng, int rows, int cols, double scale = 1.0) {
  std::normal_distribution<double> nd(0.0, scale);
  ComplexMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = Complex(nd(rng), nd(rng));
  }
  return m;
}

inline RealMatrix random_real(std::mt19937_64& rng, int rows, int cols, double scale = 1.0) {
  std::normal_distribution<double> nd(0.0, scale);
  RealMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = nd(rng);
  }
  return m;
}

inline RealMatrix random_spd(std::mt19937_64& rng, int n) {
  const RealMatrix b = random_real(rng, n, n);
  return b * b.transpose() + 0.5 * RealMatrix::Identity(n, n);
}

inline double rel_gap(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

// Code of the gaussnorm::Error raised by f; fails the test if none is.
inline gaussnorm::Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const gaussnorm::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return gaussnorm::Errc::kInternalContractViolation;
}

}  // namespace testing
