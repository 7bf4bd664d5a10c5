// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_OPERATORS_HPP
#define HARDYLERAY_OPERATORS_HPP

#include <Eigen/Dense>

#include "hardyleray/field.hpp"
#include "hardyleray/params.hpp"
#include "hardyleray/report.hpp"

namespace hardyleray {

/// theta part of the divergence: (d/dtheta + (n-2) cot theta) f. The cot
/// product is evaluated as cos theta * (f / sin theta), which is stable for
/// profiles vanishing like sin theta. Throws when |cot theta * f| near the
/// poles exceeds pole_bound * max|f| (the profile fails to vanish there).
Eigen::VectorXd theta_div(const LogRadialGrid& grid, const Eigen::VectorXd& f,
                          double pole_bound = 100.0);
Eigen::MatrixXd theta_div_columns(const LogRadialGrid& grid,
                                  const Eigen::MatrixXd& v,
                                  double pole_bound = 100.0);

/// Angular energy operator applied as the composition
/// -d/dtheta (theta_div f).
Eigen::VectorXd theta_energy_composed(const LogRadialGrid& grid,
                                      const Eigen::VectorXd& f);

/// The same operator in the expanded form
/// -f'' - (n-2) cot theta f' + (n-2) f / sin^2 theta.
Eigen::VectorXd theta_energy_direct(const LogRadialGrid& grid,
                                    const Eigen::VectorXd& f);

/// Lowest `count` eigenvalues of the angular energy operator, from the
/// symmetric quadratic form D^T W D + (n-2) diag(w_i / sin^2 theta_i)
/// against the weighted mass matrix. Converges to nu (nu + n - 2).
Eigen::VectorXd theta_spectrum(const LogRadialGrid& grid, int count);

/// Pointwise residual of the divergence-free constraint,
///   d v_rho / dt + (n/2 - gamma) v_rho + theta_div v_theta.
Eigen::MatrixXd divergence_residual(const AxisymField& v);

/// Radial component completing v_theta to a divergence-free field: apply
/// -1/(i lambda + n/2 - gamma) to the transform of theta_div v_theta.
/// Throws when gamma = n/2 and the lambda = 0 mode does not vanish.
Eigen::MatrixXd solve_v_rho(const LogRadialGrid& grid,
                            const Eigen::MatrixXd& v_theta, const Params& p);

/// \int |grad v|^2 / |x|^{n-2} dx, evaluated in (t, theta) variables with
/// the solid angle |S^{n-2}| included.
double gradient_energy(const AxisymField& v);

/// \int |v|^2 / |x|^n dx; evaluates both the t-side and the lambda-side of
/// the Plancherel identity and requires them to agree to 1e-10.
double weight_energy(const AxisymField& v);

/// Gradient energy assembled from the transform without assuming the
/// divergence constraint.
double spectral_gradient_energy(const SpectralField& w);

/// Gradient energy with w_rho eliminated through the constraint; valid for
/// divergence-free fields only.
double divfree_spectral_gradient_energy(const SpectralField& w, const Params& p);

double spectral_weight_energy(const SpectralField& w);

/// gradient_energy / weight_energy against the target total_infimum.
QuotientReport rayleigh_quotient(const AxisymField& v);

}  // namespace hardyleray

#endif  // HARDYLERAY_OPERATORS_HPP
