// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_NUMERICS_HPP
#define HARDYLERAY_NUMERICS_HPP

#include <cmath>
#include <functional>

namespace hardyleray {

inline constexpr double kDefaultRelTol = 1e-10;

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

inline bool rel_close(double a, double b, double tol = kDefaultRelTol) {
  return rel_diff(a, b) <= tol;
}

struct ScalarMin {
  double x;
  double value;
};

/// Golden-section search for a unimodal scalar function on [a, b].
ScalarMin golden_section_min(const std::function<double(double)>& f, double a,
                             double b, double xtol = 1e-10);

/// Closed-form value of \int_0^pi sin^m(theta) dtheta.
double wallis_integral(int m);

/// Surface measure of the unit sphere S^m in R^{m+1}.
double sphere_surface(int m);

}  // namespace hardyleray

#endif  // HARDYLERAY_NUMERICS_HPP
