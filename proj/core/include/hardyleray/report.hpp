// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_REPORT_HPP
#define HARDYLERAY_REPORT_HPP

#include <string>

namespace hardyleray {

/// One verification run: the two integrals, their ratio, and the constant
/// the ratio is measured against.
struct QuotientReport {
  double numerator = 0.0;
  double denominator = 0.0;
  double value = 0.0;
  double target = 0.0;

  double gap() const { return value - target; }
  double relative_gap() const { return gap() / target; }
};

/// Formats a double with 17 significant digits (lossless round trips).
std::string fmt17(double x);

/// JSON string escaping for the flat emitters.
std::string json_escape(const std::string& s);

}  // namespace hardyleray

#endif  // HARDYLERAY_REPORT_HPP
