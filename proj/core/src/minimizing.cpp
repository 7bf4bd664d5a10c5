// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hardyleray/minimizing.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hardyleray/operators.hpp"

namespace hardyleray {

const char* minimizing_kind_name(MinimizingKind k) {
  switch (k) {
    case MinimizingKind::Poloidal: return "poloidal";
    case MinimizingKind::Azimuthal: return "azimuthal";
    case MinimizingKind::PlanarNuZero: return "planar-nu0";
    case MinimizingKind::PlanarNuOne: return "planar-nu1";
  }
  return "?";
}

MinimizingSequenceSpec::MinimizingSequenceSpec(MinimizingKind kind_, double k_,
                                               const Params& p, double phi0_)
    : kind(kind_), k(k_), phi0(phi0_), params(p) {
  if (!(k >= 1.0)) {
    throw std::invalid_argument("MinimizingSequenceSpec: need k >= 1");
  }
  const bool planar =
      kind == MinimizingKind::PlanarNuZero || kind == MinimizingKind::PlanarNuOne;
  if (planar != (p.n == 2)) {
    throw std::invalid_argument(
        "MinimizingSequenceSpec: kind does not match the dimension");
  }
}

Eigen::VectorXd concentration_profile(const Eigen::VectorXd& t_nodes, double k,
                                      double decay_tol) {
  const int nt = static_cast<int>(t_nodes.size());
  const double center = 0.5 * (t_nodes[0] + t_nodes[nt - 1]);
  Eigen::VectorXd g(nt);
  for (int i = 0; i < nt; ++i) {
    const double s = (t_nodes[i] - center) / k;
    g[i] = std::exp(-0.5 * s * s);
  }
  if (std::max(g[0], g[nt - 1]) > decay_tol) {
    throw std::domain_error(
        "concentration_profile: grid too narrow for this k");
  }
  return g;
}

double suggested_t_half(double k) { return 6.5 * k; }

double suggested_t_half(const MinimizingSequenceSpec& spec) {
  const double base = suggested_t_half(spec.k);
  double c = 0.0;
  switch (spec.kind) {
    case MinimizingKind::Poloidal:
      c = std::abs(0.5 * spec.params.n - spec.params.gamma);
      break;
    case MinimizingKind::PlanarNuOne:
      c = std::abs(1.0 - spec.params.gamma);
      break;
    default:
      return base;  // no constraint-completed component
  }
  if (c < 0.05) {
    throw std::invalid_argument(
        "suggested_t_half: the constraint filter decays too slowly for a "
        "finite grid at this gamma");
  }
  // The completed component's tail is exp(-c t) times the Gaussian moment
  // exp(c^2 k^2 / 2); when c k is large the plain Gaussian width already
  // dominates at 6.5 k.
  if (c >= 6.5 / spec.k + 0.2) return base;
  const double k = spec.k;
  return std::max(base,
                  0.5 * c * k * k + (std::log(1e9) + std::log(2.6 * k)) / c);
}

double suggested_t_half_divfree(const Params& p) {
  const double c = std::abs(0.5 * p.n - p.gamma);
  if (c < 0.05) {
    throw std::invalid_argument(
        "suggested_t_half_divfree: gamma too close to n/2; the completed "
        "radial component decays too slowly for a finite grid");
  }
  // random envelopes live within |t| <= ~11; the filter tail needs
  // log(1e10)/c beyond that to clear the 1e-8 decay check with margin
  return 12.0 + std::log(1e10) / c;
}

AxisymField build_axisym_minimizer(const MinimizingSequenceSpec& spec,
                                   GridPtr grid) {
  if (spec.params.n != grid->dimension()) {
    throw std::invalid_argument("build_axisym_minimizer: dimension mismatch");
  }
  const Eigen::VectorXd g = concentration_profile(grid->t_nodes(), spec.k);
  const Eigen::VectorXd& st = grid->sin_theta();
  AxisymField v = AxisymField::zero(grid, spec.params.gamma);
  switch (spec.kind) {
    case MinimizingKind::Poloidal:
      v.v_theta = g * st.transpose();
      v.v_rho = solve_v_rho(*grid, v.v_theta, spec.params);
      break;
    case MinimizingKind::Azimuthal:
      v.v_phi = g * st.transpose();
      break;
    default:
      throw std::invalid_argument("build_axisym_minimizer: planar kind");
  }
  return v;
}

PolarField2D build_planar_minimizer(const MinimizingSequenceSpec& spec,
                                    PolarGridPtr grid) {
  const int nt = grid->nt;
  Eigen::VectorXd t_nodes(nt);
  for (int i = 0; i < nt; ++i) t_nodes[i] = grid->t_min + i * grid->dt();
  const Eigen::VectorXd g = concentration_profile(t_nodes, spec.k);

  PolarField2D v = PolarField2D::zero(grid, spec.params.gamma);
  switch (spec.kind) {
    case MinimizingKind::PlanarNuZero:
      v.v_phi = g * Eigen::RowVectorXd::Ones(grid->nphi);
      break;
    case MinimizingKind::PlanarNuOne: {
      Eigen::RowVectorXd cosphi(grid->nphi);
      for (int j = 0; j < grid->nphi; ++j) {
        cosphi[j] = std::cos(j * grid->dphi() - spec.phi0);
      }
      v.v_phi = g * cosphi;
      v.v_rho = solve_v_rho_2d(*grid, v.v_phi, spec.params.gamma);
      break;
    }
    default:
      throw std::invalid_argument("build_planar_minimizer: axisym kind");
  }
  return v;
}

AxisymField random_divfree_axisym(std::uint64_t seed, const Params& p,
                                  GridPtr grid) {
  if (p.n != grid->dimension()) {
    throw std::invalid_argument("random_divfree_axisym: dimension mismatch");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> center(-3.0, 3.0);
  std::uniform_real_distribution<double> width(0.6, 1.2);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_int_distribution<int> degree(0, 4);

  const auto& t = grid->t_nodes();
  const auto& st = grid->sin_theta();
  const auto& ct = grid->cos_theta();

  auto random_component = [&]() {
    Eigen::MatrixXd comp =
        Eigen::MatrixXd::Zero(grid->nt(), grid->n_theta());
    const int modes = 2 + static_cast<int>(rng() % 2);
    for (int m = 0; m < modes; ++m) {
      const double c = center(rng);
      const double s = width(rng);
      Eigen::VectorXd envelope(grid->nt());
      for (int i = 0; i < grid->nt(); ++i) {
        const double z = (t[i] - c) / s;
        envelope[i] = std::exp(-0.5 * z * z);
      }
      // sin(theta) * polynomial(cos theta): vanishes at the poles.
      const int deg = degree(rng);
      Eigen::VectorXd prof = Eigen::VectorXd::Zero(grid->n_theta());
      double coeff = amp(rng);
      Eigen::VectorXd power = Eigen::VectorXd::Ones(grid->n_theta());
      for (int d = 0; d <= deg; ++d) {
        prof += coeff * power;
        power = power.cwiseProduct(ct);
        coeff = amp(rng) / (d + 1.0);
      }
      comp += amp(rng) * envelope * (st.cwiseProduct(prof)).transpose();
    }
    return comp;
  };

  AxisymField v = AxisymField::zero(grid, p.gamma);
  v.v_theta = random_component();
  v.v_phi = random_component();
  v.v_rho = solve_v_rho(*grid, v.v_theta, p);
  return v;
}

}  // namespace hardyleray
