// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_STREAM2D_HPP
#define HARDYLERAY_STREAM2D_HPP

#include <Eigen/Dense>
#include <cstdint>

#include "hardyleray/params.hpp"
#include "hardyleray/report.hpp"

namespace hardyleray {

/// Scalar stream function on a uniform Cartesian grid. Nodes sit at
/// ((i + 1/2 - nx/2) h, (j + 1/2 - nx/2) h) so none coincides with the
/// origin where the weights are singular. u = curl psi = (psi_y, -psi_x)
/// is divergence free by construction.
struct StreamField2D {
  int nx = 0;
  double spacing = 0.0;
  double gamma = 0.0;
  Eigen::MatrixXd psi;  // psi(i, j) at x = coord(i), y = coord(j)

  double half_extent() const { return 0.5 * nx * spacing; }
  double coord(int i) const { return (i + 0.5 - 0.5 * nx) * spacing; }
  double max_abs() const { return psi.cwiseAbs().maxCoeff(); }

  /// Zero boundary margin; for gamma < 0 additionally a vanishing gradient
  /// next to the origin. Throws std::domain_error on violation.
  void validate() const;
};

struct StreamFieldOptions {
  int nx = 256;
  double half_extent = 1.0;
};

/// Superposition of random Gaussian bumps under a smooth radial cutoff
/// (plus an inner cutoff clearing the origin when gamma < 0).
/// Deterministic per seed.
StreamField2D random_divfree_2d(std::uint64_t seed, int num_bumps,
                                const Params& p,
                                StreamFieldOptions opts = {});

/// Radial stream function whose curl is the azimuthal field
/// u_phi(r) = r^{-gamma} sin(pi log(r/r_a) / log(r_b/r_a)) on [r_a, r_b];
/// the log-uniform profile drives the quotient toward the planar nu = 0
/// branch value gamma^2 + 1 as log(r_b/r_a) grows.
StreamField2D stream_from_log_profile(double gamma, double r_a, double r_b,
                                      StreamFieldOptions opts = {});

/// Weighted Rayleigh quotient of u = curl psi by centered differences:
/// sum |x|^{2 gamma} |grad u|^2 over sum |x|^{2 gamma - 2} |u|^2, against
/// the target 1/C_{2,gamma}.
QuotientReport check_inequality_2d(const StreamField2D& f);

/// The same functional written in second derivatives of psi:
/// sum (psi_xx^2 + 2 psi_xy^2 + psi_yy^2) |x|^{2 gamma} over
/// sum |grad psi|^2 |x|^{2 gamma - 2}. Agrees with check_inequality_2d on
/// the same psi because the discrete derivatives compose identically.
QuotientReport check_stream_form(const StreamField2D& f);

}  // namespace hardyleray

#endif  // HARDYLERAY_STREAM2D_HPP
