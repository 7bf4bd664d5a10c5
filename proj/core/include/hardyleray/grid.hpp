// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_GRID_HPP
#define HARDYLERAY_GRID_HPP

#include <Eigen/Dense>
#include <memory>

namespace hardyleray {

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on the
/// Legendre recurrence).
void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

enum class DiffScheme {
  Spectral,           // barycentric differentiation matrix (default)
  FiniteDifference4,  // 5-point Fornberg stencils on the same nodes
};

/// Discretization of the half-plane (t, theta), t = log rho uniform and
/// periodic-by-decay, theta on Gauss-Legendre nodes of (0, pi) with the
/// surface weight (sin theta)^{n-2} folded into the quadrature weights.
///
/// Immutable after construction; safe to share across threads.
class LogRadialGrid {
 public:
  LogRadialGrid(double t_min, double t_max, int nt, int dimension,
                int n_theta, DiffScheme scheme = DiffScheme::Spectral);

  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }
  int nt() const { return nt_; }
  int dimension() const { return n_; }
  int n_theta() const { return static_cast<int>(theta_nodes_.size()); }
  double dt() const { return (t_max_ - t_min_) / nt_; }
  double dlambda() const;
  DiffScheme scheme() const { return scheme_; }

  const Eigen::VectorXd& t_nodes() const { return t_nodes_; }
  const Eigen::VectorXd& theta_nodes() const { return theta_nodes_; }
  /// Quadrature weights including the (sin theta)^{n-2} surface factor.
  const Eigen::VectorXd& theta_weights() const { return theta_weights_; }
  /// d/dtheta collocation matrix on the theta nodes.
  const Eigen::MatrixXd& dtheta_matrix() const { return dtheta_; }

  const Eigen::VectorXd& sin_theta() const { return sin_theta_; }
  const Eigen::VectorXd& cos_theta() const { return cos_theta_; }

  /// Frequencies conjugate to t, in FFT order.
  const Eigen::VectorXd& lambdas() const { return lambdas_; }

  /// d/dtheta of a theta profile.
  Eigen::VectorXd dtheta(const Eigen::VectorXd& f) const { return dtheta_ * f; }

 private:
  double t_min_, t_max_;
  int nt_;
  int n_;
  DiffScheme scheme_;
  Eigen::VectorXd t_nodes_;
  Eigen::VectorXd theta_nodes_, theta_weights_;
  Eigen::VectorXd sin_theta_, cos_theta_;
  Eigen::MatrixXd dtheta_;
  Eigen::VectorXd lambdas_;
};

using GridPtr = std::shared_ptr<const LogRadialGrid>;

GridPtr make_grid(double t_min, double t_max, int nt, int dimension,
                  int n_theta, DiffScheme scheme = DiffScheme::Spectral);

}  // namespace hardyleray

#endif  // HARDYLERAY_GRID_HPP
