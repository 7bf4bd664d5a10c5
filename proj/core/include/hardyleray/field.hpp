// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_FIELD_HPP
#define HARDYLERAY_FIELD_HPP

#include <Eigen/Dense>
#include <iosfwd>

#include "hardyleray/grid.hpp"

namespace hardyleray {

/// Discretized reduced axisymmetric field v(t, theta), components sampled
/// as (nt x n_theta) matrices. v is the original field with the radial
/// weight |x|^{gamma - 1 + n/2} absorbed; gamma records that exponent.
struct AxisymField {
  GridPtr grid;
  Eigen::MatrixXd v_rho;
  Eigen::MatrixXd v_theta;
  Eigen::MatrixXd v_phi;
  double gamma = 0.0;

  static AxisymField zero(GridPtr grid, double gamma);

  double max_abs() const;

  /// Enforces the admissibility proxies: decay below decay_tol of the max
  /// at both t boundaries, and v_theta, v_phi vanishing toward the poles.
  /// Throws std::domain_error on violation.
  void validate(double decay_tol = 1e-8, double pole_factor = 100.0) const;
};

/// Log-radial Fourier transform of an AxisymField; rows are indexed by the
/// FFT-ordered frequencies of the grid.
struct SpectralField {
  GridPtr grid;
  Eigen::MatrixXcd w_rho;
  Eigen::MatrixXcd w_theta;
  Eigen::MatrixXcd w_phi;
};

SpectralField to_spectral(const AxisymField& v);

/// Columnar snapshot (columns: t, theta, v_rho, v_theta, v_phi).
void write_field_csv(const AxisymField& v, std::ostream& os);

}  // namespace hardyleray

#endif  // HARDYLERAY_FIELD_HPP
