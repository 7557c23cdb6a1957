#pragma once

namespace gaussnorm {

// All numerical thresholds used by the library live here.
struct Tolerances {
  // LU pivot magnitude below pivot_rel * max|entry| is treated as singular.
  double pivot_rel = 1e-13;
  // Relative asymmetry accepted by sym_eig and the quadratic-form constructors.
  double symmetry_rel = 1e-12;
  // Positive definiteness: min eigenvalue > pd_rel * max eigenvalue.
  double pd_rel = 1e-12;
  // Semidefinite / definite classification of Re A for Gaussian symbols.
  double psd_rel = 1e-10;
  // Ellipticity: min eigenvalue of Re H > elliptic_rel * max eigenvalue.
  double elliptic_rel = 1e-10;
  // Power iteration.
  double power_rel = 1e-10;
  int power_max_iter = 10000;
  // Width of the a - b = 1 band and of the |phi| + |theta| = pi/2 band.
  double boundary_band = 1e-10;
  // |d - i gamma b| below this is a pole of the Moebius map.
  double mobius_pole = 1e-13;
  // |cosh t| below this is an exceptional time of the Davies semigroup.
  double exceptional_time = 1e-13;
  // Distance (in units of pi/2) at which t counts as a point of (i pi/2)Z.
  double special_time = 1e-12;
  // Asymmetry of the sharp-product exponent B that signals an internal bug.
  double sharp_symmetry = 1e-10;
  // Imaginary part accepted for quantities that are real in exact arithmetic.
  double real_rel = 1e-9;
  // Imaginary part accepted for the Gram exponent B in general_gaussian_norm.
  double gram_real_rel = 1e-8;
  // Symplectic eigenvalues of the Gram exponent must stay below 2 + this.
  double gram_eig_slack = 1e-9;
  // Default number of continuation steps for square-root branch tracking.
  int branch_steps = 64;
};

inline constexpr Tolerances kTol{};

}  // namespace gaussnorm
