// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_POLAR2D_HPP
#define HARDYLERAY_POLAR2D_HPP

#include <Eigen/Dense>
#include <memory>

#include "hardyleray/params.hpp"
#include "hardyleray/report.hpp"

namespace hardyleray {

/// Uniform (t, phi) grid for the planar reduced problem; both directions
/// are differentiated spectrally, so both sizes are powers of two.
struct PolarGrid2D {
  double t_min, t_max;
  int nt;
  int nphi;

  PolarGrid2D(double t_min_, double t_max_, int nt_, int nphi_);

  double dt() const { return (t_max - t_min) / nt; }
  double dphi() const;
  double dlambda() const;
};

using PolarGridPtr = std::shared_ptr<const PolarGrid2D>;

/// Reduced planar field v = u |x|^gamma sampled on (t, phi); matrices are
/// (nt x nphi).
struct PolarField2D {
  PolarGridPtr grid;
  Eigen::MatrixXd v_rho;
  Eigen::MatrixXd v_phi;
  double gamma = 0.0;

  static PolarField2D zero(PolarGridPtr grid, double gamma);
  double max_abs() const;
  void validate(double decay_tol = 1e-8) const;
};

/// Pointwise residual of the planar divergence constraint,
///   d v_rho / dt + (1 - gamma) v_rho + d v_phi / dphi.
Eigen::MatrixXd divergence_residual_2d(const PolarField2D& v);

/// Radial component completing v_phi to a divergence-free field:
/// -1/(i lambda + 1 - gamma) applied to the transform of d v_phi / dphi.
Eigen::MatrixXd solve_v_rho_2d(const PolarGrid2D& grid,
                               const Eigen::MatrixXd& v_phi, double gamma);

/// \int |grad v|^2 dx in reduced variables (all radial weights cancel at
/// n = 2).
double gradient_energy_2d(const PolarField2D& v);

/// \int |v|^2 |x|^{-2} dx in reduced variables.
double weight_energy_2d(const PolarField2D& v);

/// gradient_energy_2d / weight_energy_2d against total_infimum(2, gamma).
QuotientReport rayleigh_quotient_2d(const PolarField2D& v);

}  // namespace hardyleray

#endif  // HARDYLERAY_POLAR2D_HPP
