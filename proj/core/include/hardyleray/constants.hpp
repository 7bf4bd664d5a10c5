// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_CONSTANTS_HPP
#define HARDYLERAY_CONSTANTS_HPP

#include "hardyleray/params.hpp"

namespace hardyleray {

/// Sharp constant 4/(2 gamma + n - 2)^2 of the weighted Hardy inequality
/// without the divergence-free restriction.
double classical_constant(const Params& p);

/// Sharp constant for divergence-free fields (axisymmetric when n > 2,
/// unrestricted when n = 2), assembled as 1/C = radial term + angular
/// infimum with every piece in closed form.
ConstantBreakdown sharp_constant(const Params& p);

/// Specialized three-dimensional formula:
///   gamma <= 1: 4/(2 gamma+1)^2 * (2+(gamma-3/2)^2)/(4+(gamma-3/2)^2)
///   gamma  > 1: 4/(8+(1+2 gamma)^2)
/// Must agree with sharp_constant(Params(3, gamma)).
double sharp_constant_3d(double gamma);

/// sharp / classical; always < 1 (the restriction strictly helps), and
/// equal to 1 - 8/(n+2)^2 at gamma = 0, n > 2.
double improvement_ratio(const Params& p);

// Closed-form helpers shared by the branch formulas. The inner minimum of
// x + A/(x+B) over x >= 0 sits at x* = max(0, sqrt(A) - B).
double inner_min_argmin(double a, double b);
double inner_min_value(double a, double b);

}  // namespace hardyleray

#endif  // HARDYLERAY_CONSTANTS_HPP
