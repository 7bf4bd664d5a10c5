// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hardyleray/field.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "hardyleray/fourier.hpp"

namespace hardyleray {

AxisymField AxisymField::zero(GridPtr grid, double gamma) {
  AxisymField v;
  const int nt = grid->nt();
  const int m = grid->n_theta();
  v.grid = std::move(grid);
  v.v_rho = Eigen::MatrixXd::Zero(nt, m);
  v.v_theta = Eigen::MatrixXd::Zero(nt, m);
  v.v_phi = Eigen::MatrixXd::Zero(nt, m);
  v.gamma = gamma;
  return v;
}

double AxisymField::max_abs() const {
  return std::max({v_rho.cwiseAbs().maxCoeff(), v_theta.cwiseAbs().maxCoeff(),
                   v_phi.cwiseAbs().maxCoeff()});
}

void AxisymField::validate(double decay_tol, double pole_factor) const {
  if (!grid) throw std::domain_error("AxisymField: no grid");
  const double scale = max_abs();
  if (scale == 0.0) return;

  const int nt = grid->nt();
  auto edge = [&](const Eigen::MatrixXd& m) {
    return std::max(m.row(0).cwiseAbs().maxCoeff(),
                    m.row(nt - 1).cwiseAbs().maxCoeff());
  };
  const double boundary = std::max({edge(v_rho), edge(v_theta), edge(v_phi)});
  if (boundary > decay_tol * scale) {
    throw std::domain_error(
        "AxisymField: field does not decay at the t boundaries");
  }

  // Pole admissibility: v_theta and v_phi must vanish toward theta = 0, pi
  // at least like sin theta so the 1/sin^2 energy term stays integrable.
  const int m = grid->n_theta();
  const auto& st = grid->sin_theta();
  for (int c : {0, m - 1}) {
    for (const Eigen::MatrixXd* comp : {&v_theta, &v_phi}) {
      const double v = comp->col(c).cwiseAbs().maxCoeff();
      if (v > pole_factor * st[c] * scale) {
        throw std::domain_error(
            "AxisymField: angular component does not vanish at the poles");
      }
    }
  }
}

SpectralField to_spectral(const AxisymField& v) {
  SpectralField w;
  w.grid = v.grid;
  const double dt = v.grid->dt();
  w.w_rho = fft_forward_columns(v.v_rho, dt);
  w.w_theta = fft_forward_columns(v.v_theta, dt);
  w.w_phi = fft_forward_columns(v.v_phi, dt);
  return w;
}

void write_field_csv(const AxisymField& v, std::ostream& os) {
  os << "t,theta,v_rho,v_theta,v_phi\n";
  char line[160];
  const auto& t = v.grid->t_nodes();
  const auto& th = v.grid->theta_nodes();
  for (int i = 0; i < v.grid->nt(); ++i) {
    for (int j = 0; j < v.grid->n_theta(); ++j) {
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", t[i],
                    th[j], v.v_rho(i, j), v.v_theta(i, j), v.v_phi(i, j));
      os << line;
    }
  }
}

}  // namespace hardyleray
