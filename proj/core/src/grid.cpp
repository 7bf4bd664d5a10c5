// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hardyleray/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hardyleray/fourier.hpp"
#include "hardyleray/numerics.hpp"

namespace hardyleray {

namespace {

// Gauss-Legendre rule computed in the angle variable x = cos(phi). Keeping
// phi (instead of x) preserves relative accuracy of the node positions at
// the interval ends, which the pole-clustered differentiation rows need:
// node differences there cancel to ~1e-9 on the x scale.
struct AngleRule {
  Eigen::VectorXd phi;  // descending, so x = cos(phi) is ascending
  Eigen::VectorXd x;
  Eigen::VectorXd w;
};

AngleRule gauss_legendre_angles(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  AngleRule r;
  r.phi.resize(n);
  r.x.resize(n);
  r.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration on phi -> P_n(cos phi); the roots stay O(1/n)
    // separated on the phi scale.
    double phi = std::numbers::pi * (i + 0.75) / (n + 0.5);
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      const double x = std::cos(phi);
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dphi = p0 / (std::sin(phi) * pp);
      phi += dphi;
      if (std::abs(dphi) < 1e-15) break;
    }
    const double sin_phi = std::sin(phi);
    const double weight = 2.0 / (sin_phi * sin_phi * pp * pp);
    // i-th node from the x > 0 end; mirror for the x < 0 end
    r.phi[n - 1 - i] = phi;
    r.x[n - 1 - i] = std::cos(phi);
    r.w[n - 1 - i] = weight;
    r.phi[i] = std::numbers::pi - phi;
    r.x[i] = -std::cos(phi);
    r.w[i] = weight;
  }
  if (n % 2 == 1) {
    r.phi[n / 2] = 0.5 * std::numbers::pi;
    r.x[n / 2] = 0.0;
  }
  return r;
}

// Barycentric differentiation matrix for theta = pi (1 + cos phi_map)/2
// with phi_map descending; node differences are evaluated through the
// product formula so the pole-clustered rows keep relative accuracy. The
// diagonal uses the negative-sum convention, accumulated in extended
// precision (entries reach ~1e7 at 256 nodes).
Eigen::MatrixXd barycentric_dtheta(const AngleRule& rule) {
  const int n = static_cast<int>(rule.x.size());
  Eigen::VectorXd c(n);
  for (int i = 0; i < n; ++i) {
    c[i] = (i % 2 ? -1.0 : 1.0) * std::sin(rule.phi[i]) * std::sqrt(rule.w[i]);
  }
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i) {
    long double row_sum = 0.0L;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      // theta_i - theta_j = -pi sin((phi_i+phi_j)/2) sin((phi_i-phi_j)/2)
      const double dtheta = -std::numbers::pi *
                            std::sin(0.5 * (rule.phi[i] + rule.phi[j])) *
                            std::sin(0.5 * (rule.phi[i] - rule.phi[j]));
      d(i, j) = (c[j] / c[i]) / dtheta;
      row_sum += static_cast<long double>(d(i, j));
    }
    d(i, i) = static_cast<double>(-row_sum);
  }
  return d;
}

// Fornberg weights for the first derivative at x0 from the given stencil.
Eigen::VectorXd fornberg_first(double x0, const Eigen::VectorXd& xs) {
  const int n = static_cast<int>(xs.size());
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, 2);
  c(0, 0) = 1.0;
  double c1 = 1.0;
  double c4 = xs[0] - x0;
  for (int i = 1; i < n; ++i) {
    double c2 = 1.0;
    const double c5 = c4;
    c4 = xs[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = xs[i] - xs[j];
      c2 *= c3;
      if (j == i - 1) {
        c(i, 1) = c1 * (c(i - 1, 0) - c5 * c(i - 1, 1)) / c2;
        c(i, 0) = -c1 * c5 * c(i - 1, 0) / c2;
      }
      c(j, 1) = (c4 * c(j, 1) - c(j, 0)) / c3;
      c(j, 0) = c4 * c(j, 0) / c3;
    }
    c1 = c2;
  }
  return c.col(1);
}

Eigen::MatrixXd fd_dtheta(const Eigen::VectorXd& theta, int half_width) {
  const int n = static_cast<int>(theta.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    int lo = std::max(0, i - half_width);
    int hi = std::min(n - 1, i + half_width);
    while (hi - lo < 2 * half_width) {
      if (lo > 0) --lo;
      else if (hi < n - 1) ++hi;
      else break;
    }
    const int m = hi - lo + 1;
    const Eigen::VectorXd w = fornberg_first(theta[i], theta.segment(lo, m));
    for (int k = 0; k < m; ++k) d(i, lo + k) = w[k];
  }
  return d;
}

}  // namespace

void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  const AngleRule rule = gauss_legendre_angles(n);
  nodes = rule.x;
  weights = rule.w;
}

LogRadialGrid::LogRadialGrid(double t_min, double t_max, int nt, int dimension,
                             int n_theta, DiffScheme scheme)
    : t_min_(t_min), t_max_(t_max), nt_(nt), n_(dimension), scheme_(scheme) {
  if (!(t_max > t_min)) {
    throw std::invalid_argument("LogRadialGrid: need t_max > t_min");
  }
  if (nt < 2 || (nt & (nt - 1)) != 0) {
    throw std::invalid_argument("LogRadialGrid: nt must be a power of two");
  }
  if (dimension < 3) {
    throw std::invalid_argument(
        "LogRadialGrid: polar-angle machinery needs dimension >= 3");
  }
  if (n_theta < 8) {
    throw std::invalid_argument("LogRadialGrid: need n_theta >= 8");
  }

  t_nodes_.resize(nt);
  for (int i = 0; i < nt; ++i) t_nodes_[i] = t_min + i * dt();
  lambdas_ = fft_frequencies(nt, dt());

  const AngleRule rule = gauss_legendre_angles(n_theta);
  theta_nodes_.resize(n_theta);
  sin_theta_.resize(n_theta);
  cos_theta_.resize(n_theta);
  theta_weights_.resize(n_theta);
  for (int i = 0; i < n_theta; ++i) {
    const double half = 0.5 * rule.phi[i];
    const double ct2 = std::cos(half) * std::cos(half);
    const double st2 = std::sin(half) * std::sin(half);
    // theta and its complement, each accurate relative to its own size
    const double theta = std::numbers::pi * ct2;
    const double complement = std::numbers::pi * st2;
    theta_nodes_[i] = theta;
    sin_theta_[i] = std::sin(std::min(theta, complement));
    cos_theta_[i] = theta <= complement ? std::cos(theta) : -std::cos(complement);
    theta_weights_[i] = (std::numbers::pi / 2.0) * rule.w[i] *
                        std::pow(sin_theta_[i], n_ - 2);
  }
  const double wallis = wallis_integral(n_ - 2);
  if (!rel_close(theta_weights_.sum(), wallis, 1e-10)) {
    throw std::runtime_error(
        "LogRadialGrid: quadrature does not reproduce the surface measure; "
        "increase n_theta");
  }

  dtheta_ = scheme == DiffScheme::Spectral ? barycentric_dtheta(rule)
                                           : fd_dtheta(theta_nodes_, 2);
}

double LogRadialGrid::dlambda() const {
  return 2.0 * std::numbers::pi / (nt_ * dt());
}

GridPtr make_grid(double t_min, double t_max, int nt, int dimension,
                  int n_theta, DiffScheme scheme) {
  return std::make_shared<const LogRadialGrid>(t_min, t_max, nt, dimension,
                                               n_theta, scheme);
}

}  // namespace hardyleray
