// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_SPECTRAL_HPP
#define HARDYLERAY_SPECTRAL_HPP

#include "hardyleray/params.hpp"

namespace hardyleray {

/// A point of the reduced minimization problem: log-radial frequency
/// lambda and angular mode nu with eigenvalue alpha = nu (nu + n - 2).
struct SpectralPoint {
  double lambda;
  int nu;
  double alpha;

  SpectralPoint(double lambda_, int nu_, const Params& p);
};

/// Value of the mode Rayleigh quotient: gradient-side form over
/// weight-side form for a single (lambda, nu).
struct ReducedQuotient {
  double numerator_form;
  double denominator_form;
  double value;
};

/// Reduced poloidal objective for n > 2:
///   f(x, alpha, gamma) = x - n + 3
///                      + alpha (1 - 16(1-gamma)/(4x + 4 alpha + (n-2 gamma)^2)).
/// x stands for lambda^2. Throws std::domain_error when the denominator
/// vanishes (x = alpha = 0 with gamma = n/2).
double poloidal_objective(double x, double alpha, const Params& p);

/// The same quantity assembled as the ratio of the gradient and weight
/// forms of one (lambda, nu) mode; algebraically identical to
/// poloidal_objective(lambda^2, alpha_nu, p).
ReducedQuotient poloidal_mode_quotient(const SpectralPoint& s, const Params& p);

/// Reduced planar objective for n = 2. The angular index enters through
/// the eigenvalue nu^2 of -d^2/dphi^2:
///   f(x, nu, gamma) = x + 1 + nu^2 (1 - 4(1-gamma)/(x + nu^2 + (1-gamma)^2)).
double planar_objective(double x, int nu, double gamma);

/// Infimum of the poloidal branch (n > 2). gamma <= 1: attained at
/// x = 0, alpha_1 = n - 1; gamma > 1: the inner minimum over x is placed in
/// closed form and the objective evaluated there.
double poloidal_infimum(const Params& p);

/// Infimum of the decoupled azimuthal branch (n > 2): n - 1, the first
/// nonzero Laplace-Beltrami eigenvalue, attained in the lambda -> 0 limit.
double azimuthal_infimum(const Params& p);

/// The angular infimum entering 1/C = (n/2 + gamma - 1)^2 + total_infimum.
/// n > 2: min(poloidal, azimuthal). n = 2: minimum of the planar objective
/// (gamma <= 1: over nu in {0,1,2} at x = 0; gamma > 1: the value 1).
double total_infimum(const Params& p);

/// Grid minimum over both branches, with the location of the minimizer for
/// reporting. Ties go to smaller lambda, then smaller nu; the poloidal
/// branch is preferred over the azimuthal on exact ties.
struct BruteForceResult {
  double value;
  double lambda;
  int nu;
  bool azimuthal;  // n > 2 only; always false for n = 2
};

/// Independent oracle: scans lambda in [0, lambda_max] (grid_points uniform
/// samples including both endpoints) and nu up to nu_max. For n > 2 the scan
/// covers the poloidal mode quotients and the azimuthal branch quotients
/// lambda^2 + alpha_nu; for n = 2 it covers the planar objective with
/// nu >= 0. Converges to total_infimum from above.
BruteForceResult brute_force_infimum(const Params& p, double lambda_max,
                                     int nu_max, int grid_points);

}  // namespace hardyleray

#endif  // HARDYLERAY_SPECTRAL_HPP
