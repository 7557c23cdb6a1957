#pragma once

#include <cmath>
#include <functional>
#include <numbers>

#include "gaussnorm/error.hpp"
#include "gaussnorm/linalg.hpp"

namespace gaussnorm::detail {

// Square root of f(1) continued along s in [0, 1] from the root 1 of
// f(0) = 1. An interval is bisected whenever f turns by more than a quarter
// turn across it.
class ContinuedSqrt {
 public:
  explicit ContinuedSqrt(std::function<Complex(double)> f) : f_(std::move(f)) {}

  Complex run(int steps) {
    Complex value = f_(0.0);
    Complex root = std::sqrt(value);
    if (std::real(root) < 0.0) root = -root;
    for (int k = 0; k < steps; ++k) {
      const double s0 = static_cast<double>(k) / steps;
      const double s1 = static_cast<double>(k + 1) / steps;
      advance(s0, s1, value, root, 0);
    }
    return root;
  }

 private:
  void advance(double s0, double s1, Complex& value, Complex& root, int depth) {
    const Complex next = f_(s1);
    if (next == Complex(0.0)) {
      throw Error(Errc::kInternalContractViolation, "determinant vanished on the continuation path");
    }
    const double turn = std::abs(std::arg(next / value));
    if (turn > 0.5 * std::numbers::pi && depth < 30) {
      const double mid = 0.5 * (s0 + s1);
      advance(s0, mid, value, root, depth + 1);
      advance(mid, s1, value, root, depth + 1);
      return;
    }
    Complex r = std::sqrt(next);
    if (std::real(r * std::conj(root)) < 0.0) r = -r;
    value = next;
    root = r;
  }

  std::function<Complex(double)> f_;
};

}  // namespace gaussnorm::detail
