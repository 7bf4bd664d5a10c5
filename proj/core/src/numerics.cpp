// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hardyleray/numerics.hpp"

#include <numbers>
#include <stdexcept>

namespace hardyleray {

ScalarMin golden_section_min(const std::function<double(double)>& f, double a,
                             double b, double xtol) {
  if (!(b > a)) throw std::invalid_argument("golden_section_min: need b > a");
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > xtol * (1.0 + std::abs(a) + std::abs(b))) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

double wallis_integral(int m) {
  if (m < 0) throw std::invalid_argument("wallis_integral: need m >= 0");
  // sqrt(pi) * Gamma((m+1)/2) / Gamma(m/2 + 1)
  const double lg = 0.5 * std::log(std::numbers::pi) +
                    std::lgamma(0.5 * (m + 1)) - std::lgamma(0.5 * m + 1.0);
  return std::exp(lg);
}

double sphere_surface(int m) {
  if (m < 0) throw std::invalid_argument("sphere_surface: need m >= 0");
  // |S^m| = 2 pi^{(m+1)/2} / Gamma((m+1)/2)
  const double half = 0.5 * (m + 1);
  return 2.0 * std::exp(half * std::log(std::numbers::pi) - std::lgamma(half));
}

}  // namespace hardyleray
