// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_PARAMS_HPP
#define HARDYLERAY_PARAMS_HPP

#include <stdexcept>
#include <string>

namespace hardyleray {

/// Weight exponents gamma = 1 - n/2 (n > 2) and gamma = 0 (n = 2) are
/// excluded: the sharp constant blows up there.
double forbidden_gamma(int n);

/// Problem parameters: space dimension n >= 2 and the radial weight
/// exponent gamma of the inequality
///   \int |x|^{2 gamma - 2} |u|^2 dx <= C \int |x|^{2 gamma} |grad u|^2 dx.
///
/// Construction rejects the excluded gamma exactly and flags values inside
/// a small guard band around it, where the constant is astronomically large.
struct Params {
  int n;
  double gamma;

  Params(int n_, double gamma_, double guard_band = 1e-9);

  /// gamma lies within the guard band of the excluded value (but is not
  /// exactly it). Callers may want to warn before trusting the output.
  bool near_forbidden() const { return near_forbidden_; }

  /// s = n/2 + gamma - 1, the radial shift; the inverse constant is
  /// s^2 + (angular infimum).
  double radial_shift() const { return 0.5 * n + gamma - 1.0; }

  friend bool operator==(const Params& a, const Params& b) {
    return a.n == b.n && a.gamma == b.gamma;
  }

 private:
  bool near_forbidden_ = false;
};

/// Which closed-form branch produced a constant.
enum class Branch {
  PoloidalGammaLE1,     // n > 2, gamma <= 1: poloidal infimum at alpha_1
  GammaGT1TwoLevelMin,  // n > 2, gamma > 1: min{n-1, 2 + inner min}
  TwoD_NuOne,           // n = 2, gamma in [-sqrt(3)-1, sqrt(3)-1]
  TwoD_NuZero,          // n = 2, otherwise
};

const char* branch_name(Branch b);

/// The sharp constant together with the decomposition
///   1/C = (n/2 + gamma - 1)^2 + angular infimum.
struct ConstantBreakdown {
  double c;
  double c_inverse;
  double radial_term;
  double angular_infimum;
  Branch branch;
};

}  // namespace hardyleray

#endif  // HARDYLERAY_PARAMS_HPP
