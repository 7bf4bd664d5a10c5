// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hardyleray/params.hpp"

#include <cmath>

namespace hardyleray {

double forbidden_gamma(int n) { return n == 2 ? 0.0 : 1.0 - 0.5 * n; }

Params::Params(int n_, double gamma_, double guard_band) : n(n_), gamma(gamma_) {
  if (n < 2) {
    throw std::invalid_argument("Params: dimension n must be >= 2, got " +
                                std::to_string(n));
  }
  if (!std::isfinite(gamma)) {
    throw std::invalid_argument("Params: gamma must be finite");
  }
  const double bad = forbidden_gamma(n);
  if (gamma == bad) {
    throw std::domain_error(
        "Params: gamma = " + std::to_string(bad) + " is excluded (gamma = " +
        (n == 2 ? std::string("0 at n = 2") : "1 - n/2 at n = " + std::to_string(n)) +
        ")");
  }
  near_forbidden_ = std::abs(gamma - bad) < guard_band;
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::PoloidalGammaLE1: return "PoloidalGammaLE1";
    case Branch::GammaGT1TwoLevelMin: return "GammaGT1TwoLevelMin";
    case Branch::TwoD_NuOne: return "TwoD_NuOne";
    case Branch::TwoD_NuZero: return "TwoD_NuZero";
  }
  return "?";
}

}  // namespace hardyleray
