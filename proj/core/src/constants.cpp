// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hardyleray/constants.hpp"

#include <cassert>
#include <cmath>

#include "hardyleray/numerics.hpp"

namespace hardyleray {

namespace {

// Value at the poloidal minimizer (x = 0, alpha = n - 1) for gamma <= 1:
// 2 (gamma - 1 + n/2)^2 / (n - 1 + (gamma - n/2)^2).
double poloidal_branch_value(const Params& p) {
  const double s = p.radial_shift();
  const double d = p.gamma - 0.5 * p.n;
  return 2.0 * s * s / (p.n - 1.0 + d * d);
}

// gamma > 1 branch interval endpoints for n = 2.
constexpr double kSqrt3 = 1.7320508075688772935;

}  // namespace

double inner_min_argmin(double a, double b) {
  assert(a >= 0.0 && b > 0.0);
  const double root = std::sqrt(a);
  return root > b ? root - b : 0.0;
}

double inner_min_value(double a, double b) {
  const double root = std::sqrt(a);
  if (root > b) return 2.0 * root - b;
  return a / b;
}

double classical_constant(const Params& p) {
  const double s = 2.0 * p.gamma + p.n - 2.0;
  return 4.0 / (s * s);
}

ConstantBreakdown sharp_constant(const Params& p) {
  ConstantBreakdown out{};
  out.radial_term = p.radial_shift() * p.radial_shift();
  if (p.n > 2) {
    if (p.gamma <= 1.0) {
      out.angular_infimum = poloidal_branch_value(p);
      out.branch = Branch::PoloidalGammaLE1;
    } else {
      const double d = p.gamma - 0.5 * p.n;
      const double a = 4.0 * (p.n - 1.0) * (p.gamma - 1.0);
      const double b = p.n - 1.0 + d * d;
      const double two_level = 2.0 + inner_min_value(a, b);
#ifndef NDEBUG
      // The closed-form inner minimum is cross-checked against a direct
      // scalar search; the search interval always brackets the minimizer.
      const auto gs = golden_section_min(
          [&](double x) { return x + a / (x + b); }, 0.0, std::sqrt(a) + 1.0);
      assert(std::abs(gs.value - inner_min_value(a, b)) <
             1e-8 * (1.0 + std::abs(gs.value)));
#endif
      out.angular_infimum = std::min(p.n - 1.0, two_level);
      out.branch = Branch::GammaGT1TwoLevelMin;
    }
  } else {
    const bool nu_one = p.gamma >= -kSqrt3 - 1.0 && p.gamma <= kSqrt3 - 1.0;
    if (nu_one) {
      const double m = (1.0 - p.gamma) * (1.0 - p.gamma);
      out.angular_infimum = 2.0 - 4.0 * (1.0 - p.gamma) / (1.0 + m);
      out.branch = Branch::TwoD_NuOne;
    } else {
      out.angular_infimum = 1.0;
      out.branch = Branch::TwoD_NuZero;
    }
  }
  out.c_inverse = out.radial_term + out.angular_infimum;
  out.c = 1.0 / out.c_inverse;
  return out;
}

double sharp_constant_3d(double gamma) {
  const Params p(3, gamma);  // rejects gamma = -1/2
  if (gamma <= 1.0) {
    const double s = 2.0 * gamma + 1.0;
    const double d = (gamma - 1.5) * (gamma - 1.5);
    return 4.0 / (s * s) * (2.0 + d) / (4.0 + d);
  }
  const double s = 1.0 + 2.0 * gamma;
  return 4.0 / (8.0 + s * s);
}

double improvement_ratio(const Params& p) {
  return sharp_constant(p).c / classical_constant(p);
}

}  // namespace hardyleray
