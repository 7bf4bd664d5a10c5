// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hardyleray/spectral.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hardyleray/constants.hpp"
#include "hardyleray/parallel.hpp"

namespace hardyleray {

SpectralPoint::SpectralPoint(double lambda_, int nu_, const Params& p)
    : lambda(lambda_), nu(nu_) {
  const int floor_nu = p.n > 2 ? 1 : 0;
  if (nu < floor_nu) {
    throw std::invalid_argument("SpectralPoint: nu must be >= " +
                                std::to_string(floor_nu));
  }
  alpha = static_cast<double>(nu) * (nu + p.n - 2.0);
}

double poloidal_objective(double x, double alpha, const Params& p) {
  if (p.n <= 2) throw std::invalid_argument("poloidal_objective: need n > 2");
  if (x < 0.0 || alpha < 0.0) {
    throw std::invalid_argument("poloidal_objective: need x >= 0, alpha >= 0");
  }
  const double shift = p.n - 2.0 * p.gamma;
  const double den = 4.0 * x + 4.0 * alpha + shift * shift;
  if (den == 0.0) {
    throw std::domain_error("poloidal_objective: denominator vanishes");
  }
  return x - p.n + 3.0 + alpha * (1.0 - 16.0 * (1.0 - p.gamma) / den);
}

ReducedQuotient poloidal_mode_quotient(const SpectralPoint& s, const Params& p) {
  if (p.n <= 2) {
    throw std::invalid_argument("poloidal_mode_quotient: need n > 2");
  }
  const double d = 0.5 * p.n - p.gamma;
  const double pole = s.lambda * s.lambda + d * d;
  if (pole == 0.0) {
    throw std::domain_error("poloidal_mode_quotient: lambda = 0 with gamma = n/2");
  }
  const double x = s.lambda * s.lambda;
  ReducedQuotient q{};
  q.numerator_form = ((-p.n - 1.0 + x + 4.0 * p.gamma) / pole + 1.0) * s.alpha +
                     x - p.n + 3.0 + s.alpha * s.alpha / pole;
  q.denominator_form = s.alpha / pole + 1.0;
  q.value = q.numerator_form / q.denominator_form;
  return q;
}

double planar_objective(double x, int nu, double gamma) {
  if (x < 0.0 || nu < 0) {
    throw std::invalid_argument("planar_objective: need x >= 0, nu >= 0");
  }
  const double mu = static_cast<double>(nu) * nu;
  const double m = (1.0 - gamma) * (1.0 - gamma);
  const double den = x + mu + m;
  if (den == 0.0) {
    throw std::domain_error("planar_objective: denominator vanishes");
  }
  return x + 1.0 + mu * (1.0 - 4.0 * (1.0 - gamma) / den);
}

double poloidal_infimum(const Params& p) {
  if (p.n <= 2) throw std::invalid_argument("poloidal_infimum: need n > 2");
  const double alpha1 = p.n - 1.0;
  if (p.gamma <= 1.0) {
    return poloidal_objective(0.0, alpha1, p);
  }
  const double d = p.gamma - 0.5 * p.n;
  const double a = 4.0 * (p.n - 1.0) * (p.gamma - 1.0);
  const double b = p.n - 1.0 + d * d;
  return poloidal_objective(inner_min_argmin(a, b), alpha1, p);
}

double azimuthal_infimum(const Params& p) {
  if (p.n <= 2) throw std::invalid_argument("azimuthal_infimum: need n > 2");
  return p.n - 1.0;
}

double total_infimum(const Params& p) {
  if (p.n > 2) {
    return std::min(poloidal_infimum(p), azimuthal_infimum(p));
  }
  if (p.gamma > 1.0) return 1.0;
  // nu = 0 contributes x + 1 identically, so its candidate is 1 even where
  // the literal formula degenerates (x = 0, gamma = 1).
  double best = 1.0;
  for (int nu = 1; nu <= 2; ++nu) {
    best = std::min(best, planar_objective(0.0, nu, p.gamma));
  }
  return best;
}

BruteForceResult brute_force_infimum(const Params& p, double lambda_max,
                                     int nu_max, int grid_points) {
  if (!(lambda_max > 0.0)) {
    throw std::invalid_argument("brute_force_infimum: need lambda_max > 0");
  }
  if (nu_max < 2) {
    throw std::invalid_argument("brute_force_infimum: need nu_max >= 2");
  }
  if (grid_points < 100) {
    throw std::invalid_argument("brute_force_infimum: need grid >= 100");
  }

  const int nu_min = p.n > 2 ? 1 : 0;
  const double dl = lambda_max / (grid_points - 1);

  std::vector<BruteForceResult> best_per_row(
      grid_points, BruteForceResult{std::numeric_limits<double>::infinity(),
                                    0.0, nu_min, false});
  parallel_chunks(grid_points, [&](int i) {
    const double lambda = i == grid_points - 1 ? lambda_max : i * dl;
    const double x = lambda * lambda;
    BruteForceResult row = best_per_row[i];
    const double dpole = 0.5 * p.n - p.gamma;
    for (int nu = nu_min; nu <= nu_max; ++nu) {
      if (p.n > 2) {
        const SpectralPoint s(lambda, nu, p);
        // at gamma = n/2 the lambda = 0 quotient form degenerates; the
        // objective carries its (finite) continuous value there
        const double q = x + dpole * dpole > 0.0
                             ? poloidal_mode_quotient(s, p).value
                             : poloidal_objective(x, s.alpha, p);
        if (q < row.value) row = {q, lambda, nu, false};
        const double r = x + s.alpha;  // decoupled azimuthal branch
        if (r < row.value) row = {r, lambda, nu, true};
      } else {
        const double q = nu == 0 ? x + 1.0 : planar_objective(x, nu, p.gamma);
        if (q < row.value) row = {q, lambda, nu, false};
      }
    }
    best_per_row[i] = row;
  });

  // Ordered merge: ties resolve toward smaller lambda, then smaller nu,
  // with the poloidal branch preferred on exact ties.
  BruteForceResult best = best_per_row[0];
  for (int i = 1; i < grid_points; ++i) {
    if (best_per_row[i].value < best.value) best = best_per_row[i];
  }
  return best;
}

}  // namespace hardyleray
