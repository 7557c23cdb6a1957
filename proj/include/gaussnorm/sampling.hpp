#pragma once

#include <random>

#include "gaussnorm/symbols.hpp"

namespace gaussnorm {

/// c exp(-1/2 Z.AZ) with Re A = B B^T + floor I and a symmetric imaginary
/// part of size `imag_scale`.
GaussianSymbol random_integrable_symbol(std::mt19937_64& rng, int n, double floor = 0.5,
                                        double imag_scale = 0.5);

/// Elliptic q with Re H = I + (small symmetric perturbation), coupled
/// across all coordinates, plus a symmetric imaginary part.
QuadraticForm random_elliptic_form(std::mt19937_64& rng, int n, double coupling = 0.25,
                                   double imag_scale = 0.4);

}  // namespace gaussnorm
