// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hardyleray/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "hardyleray/fourier.hpp"
#include "hardyleray/numerics.hpp"
#include "hardyleray/spectral.hpp"

namespace hardyleray {

namespace {

// Multiply column j of m by s[j].
template <typename Mat>
Mat scale_cols(const Mat& m, const Eigen::VectorXd& s) {
  return m.array().rowwise() * s.transpose().array();
}

// Multiply row i of m by s[i].
Eigen::MatrixXcd scale_rows_c(const Eigen::MatrixXcd& m,
                              const Eigen::VectorXcd& s) {
  return m.array().colwise() * s.array();
}

Eigen::MatrixXcd scale_cols_c(const Eigen::MatrixXcd& m,
                              const Eigen::VectorXd& s) {
  Eigen::MatrixXcd out = m;
  for (int c = 0; c < out.cols(); ++c) out.col(c) *= s[c];
  return out;
}

void check_poles(const LogRadialGrid& grid, const Eigen::MatrixXd& v,
                 double pole_bound) {
  const double scale = v.cwiseAbs().maxCoeff();
  if (scale == 0.0) return;
  const int m = grid.n_theta();
  const auto& st = grid.sin_theta();
  const auto& ct = grid.cos_theta();
  for (int c : {0, 1, m - 2, m - 1}) {
    const double cot = std::abs(ct[c]) / st[c];
    if (v.col(c).cwiseAbs().maxCoeff() * cot > pole_bound * scale) {
      throw std::domain_error(
          "theta_div: profile does not vanish fast enough at the poles");
    }
  }
}

}  // namespace

Eigen::MatrixXd theta_div_columns(const LogRadialGrid& grid,
                                  const Eigen::MatrixXd& v, double pole_bound) {
  check_poles(grid, v, pole_bound);
  const Eigen::VectorXd cot_like =
      grid.cos_theta().cwiseQuotient(grid.sin_theta());
  Eigen::MatrixXd out = v * grid.dtheta_matrix().transpose();
  out += (grid.dimension() - 2.0) * scale_cols(v, cot_like);
  return out;
}

Eigen::VectorXd theta_div(const LogRadialGrid& grid, const Eigen::VectorXd& f,
                          double pole_bound) {
  return theta_div_columns(grid, f.transpose(), pole_bound).transpose();
}

namespace {

using VectorXld = std::vector<long double>;

// The differentiation rows at the pole-clustered nodes carry entries of
// order N^2/theta; applying them twice in double precision loses ~7 digits
// at 256 nodes. Profile-level operator applications therefore accumulate
// in extended precision.
VectorXld dtheta_ld(const LogRadialGrid& grid, const VectorXld& f) {
  const int m = grid.n_theta();
  const Eigen::MatrixXd& d = grid.dtheta_matrix();
  VectorXld out(m, 0.0L);
  for (int i = 0; i < m; ++i) {
    long double acc = 0.0L;
    for (int j = 0; j < m; ++j) acc += static_cast<long double>(d(i, j)) * f[j];
    out[i] = acc;
  }
  return out;
}

VectorXld to_ld(const Eigen::VectorXd& f) {
  return VectorXld(f.data(), f.data() + f.size());
}

Eigen::VectorXd from_ld(const VectorXld& f) {
  Eigen::VectorXd out(static_cast<int>(f.size()));
  for (size_t i = 0; i < f.size(); ++i) out[static_cast<int>(i)] = static_cast<double>(f[i]);
  return out;
}

}  // namespace

Eigen::VectorXd theta_energy_composed(const LogRadialGrid& grid,
                                      const Eigen::VectorXd& f) {
  // The composition -d/dtheta (theta_div f) written in the admissible
  // substitution f = sin(theta) u:
  //   T f = (n-1) sin u - n cos u' - sin u''.
  // The sin(theta) prefactors cancel the growth of the differentiation
  // rows at the pole-clustered nodes, which a literal double application
  // of the collocation matrix cannot do.
  check_poles(grid, f.transpose(), 100.0);
  const double n = grid.dimension();
  const auto& st = grid.sin_theta();
  const auto& ct = grid.cos_theta();
  const Eigen::VectorXd u = f.cwiseQuotient(st);
  const Eigen::VectorXd du = grid.dtheta(u);
  const Eigen::VectorXd ddu = grid.dtheta(du);
  return (n - 1.0) * st.cwiseProduct(u) - n * ct.cwiseProduct(du) -
         st.cwiseProduct(ddu);
}

Eigen::VectorXd theta_energy_direct(const LogRadialGrid& grid,
                                    const Eigen::VectorXd& f) {
  const double nm2 = grid.dimension() - 2.0;
  const auto& st = grid.sin_theta();
  const auto& ct = grid.cos_theta();
  const VectorXld df = dtheta_ld(grid, to_ld(f));
  // -f'' - (n-2) cot f' + (n-2) f / sin^2, grouped so the two pole-singular
  // pieces cancel before the final division.
  VectorXld out = dtheta_ld(grid, df);
  for (int i = 0; i < grid.n_theta(); ++i) {
    const long double pole_pair =
        (static_cast<long double>(f[i]) / st[i] -
         static_cast<long double>(ct[i]) * df[i]) /
        st[i];
    out[i] = -out[i] + nm2 * pole_pair;
  }
  return from_ld(out);
}

Eigen::VectorXd theta_spectrum(const LogRadialGrid& grid, int count) {
  const int m = grid.n_theta();
  const int basis = std::min(m / 2, 96);
  if (count < 1 || count > basis) {
    throw std::invalid_argument("theta_spectrum: bad eigenvalue count");
  }
  // Galerkin form in the admissible family f_j = sin(theta) P_j(cos theta):
  // the sin factor pins the pole behavior of vector components. For n >= 5
  // the raw nodal form domain also contains pole-nonvanishing profiles
  // whose spectrum does not belong to the vector problem.
  //   energy(f_i, f_j) = int (f_i' f_j' + (n-2) P_i P_j) sin^{n-2},
  //   mass(f_i, f_j)   = int sin^2 P_i P_j sin^{n-2},
  // with f_j' = cos P_j - sin^2 P_j' evaluated through the Legendre
  // recurrences on the quadrature nodes.
  const auto& z = grid.cos_theta();
  const auto& s = grid.sin_theta();
  const auto& w = grid.theta_weights();
  Eigen::MatrixXd p(m, basis), dp(m, basis);
  p.col(0).setOnes();
  dp.col(0).setZero();
  p.col(1) = z;
  dp.col(1).setOnes();
  for (int j = 1; j + 1 < basis; ++j) {
    p.col(j + 1) = ((2.0 * j + 1.0) * z.cwiseProduct(p.col(j)) -
                    static_cast<double>(j) * p.col(j - 1)) /
                   (j + 1.0);
    dp.col(j + 1) = dp.col(j - 1) + (2.0 * j + 1.0) * p.col(j);
  }
  const Eigen::VectorXd s2 = s.array().square();
  Eigen::MatrixXd fp(m, basis);
  for (int j = 0; j < basis; ++j) {
    fp.col(j) = z.cwiseProduct(p.col(j)) - s2.cwiseProduct(dp.col(j));
  }
  const double nm2 = grid.dimension() - 2.0;
  Eigen::MatrixXd a = fp.transpose() * w.asDiagonal() * fp +
                      nm2 * (p.transpose() * w.asDiagonal() * p);
  Eigen::MatrixXd b =
      p.transpose() * (w.cwiseProduct(s2)).asDiagonal() * p;
  a = 0.5 * (a + a.transpose()).eval();
  b = 0.5 * (b + b.transpose()).eval();
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, b);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("theta_spectrum: eigensolver failed");
  }
  return solver.eigenvalues().head(count);
}

Eigen::MatrixXd divergence_residual(const AxisymField& v) {
  const auto& grid = *v.grid;
  const double c = 0.5 * grid.dimension() - v.gamma;
  return dt_derivative_columns(v.v_rho, grid.dt()) + c * v.v_rho +
         theta_div_columns(grid, v.v_theta);
}

Eigen::MatrixXd solve_v_rho(const LogRadialGrid& grid,
                            const Eigen::MatrixXd& v_theta, const Params& p) {
  if (grid.dimension() != p.n) {
    throw std::invalid_argument("solve_v_rho: grid/params dimension mismatch");
  }
  const double c = 0.5 * p.n - p.gamma;
  const Eigen::MatrixXd g = theta_div_columns(grid, v_theta);
  Eigen::MatrixXcd w = fft_forward_columns(g, grid.dt());
  const auto& lambdas = grid.lambdas();
  const double scale = w.cwiseAbs().maxCoeff();
  for (int j = 0; j < grid.nt(); ++j) {
    if (lambdas[j] == 0.0 && c == 0.0) {
      if (w.row(j).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw std::domain_error(
            "solve_v_rho: gamma = n/2 with a nonvanishing mean mode");
      }
      w.row(j).setZero();
      continue;
    }
    w.row(j) *= -1.0 / std::complex<double>(c, lambdas[j]);
  }
  w.row(grid.nt() / 2).setZero();  // ambiguous Nyquist bin
  return fft_inverse_columns_real(w, grid.dt());
}

double gradient_energy(const AxisymField& v) {
  v.validate();
  const auto& grid = *v.grid;
  const double nm2 = grid.dimension() - 2.0;
  const double nm1 = grid.dimension() - 1.0;
  const double dt = grid.dt();
  const auto& st = grid.sin_theta();
  const auto& ct = grid.cos_theta();
  const Eigen::VectorXd cot_like = ct.cwiseQuotient(st);
  const Eigen::VectorXd inv_sin = st.cwiseInverse();
  const Eigen::MatrixXd dth_t = grid.dtheta_matrix().transpose();

  const Eigen::MatrixXd dvr_dt = dt_derivative_columns(v.v_rho, dt);
  const Eigen::MatrixXd dvt_dt = dt_derivative_columns(v.v_theta, dt);
  const Eigen::MatrixXd dvr_dth = v.v_rho * dth_t;
  const Eigen::MatrixXd dvt_dth = v.v_theta * dth_t;
  const Eigen::MatrixXd div_theta =
      dvt_dth + nm2 * scale_cols(v.v_theta, cot_like);

  // rho^2 |grad v|^2 for the (v_rho, v_theta) pair, with d/dt standing in
  // for rho d/drho.
  Eigen::ArrayXXd integrand =
      dvr_dt.array().square() + dvt_dt.array().square() +
      dvr_dth.array().square() + dvt_dth.array().square() +
      v.v_theta.array().square() + nm1 * v.v_rho.array().square() +
      nm2 * scale_cols(v.v_theta, cot_like).array().square() +
      2.0 * (v.v_rho.array() * div_theta.array() -
             v.v_theta.array() * dvr_dth.array());

  if (v.v_phi.cwiseAbs().maxCoeff() != 0.0) {
    const Eigen::MatrixXd dvp_dt = dt_derivative_columns(v.v_phi, dt);
    const Eigen::MatrixXd dvp_dth = v.v_phi * dth_t;
    integrand += dvp_dt.array().square() + dvp_dth.array().square() +
                 nm2 * scale_cols(v.v_phi, inv_sin).array().square();
  }

  const double solid = sphere_surface(grid.dimension() - 2);
  return solid * dt * (integrand.matrix() * grid.theta_weights()).sum();
}

double weight_energy(const AxisymField& v) {
  const auto& grid = *v.grid;
  const Eigen::ArrayXXd sq = v.v_rho.array().square() +
                             v.v_theta.array().square() +
                             v.v_phi.array().square();
  const double solid = sphere_surface(grid.dimension() - 2);
  const double t_side =
      solid * grid.dt() * (sq.matrix() * grid.theta_weights()).sum();
  const double l_side = spectral_weight_energy(to_spectral(v));
  if (t_side != 0.0 && !rel_close(t_side, l_side, 1e-10)) {
    throw std::runtime_error("weight_energy: Plancherel identity violated");
  }
  return t_side;
}

double spectral_weight_energy(const SpectralField& w) {
  const auto& grid = *w.grid;
  const Eigen::ArrayXXd sq = w.w_rho.array().abs2() + w.w_theta.array().abs2() +
                             w.w_phi.array().abs2();
  const double solid = sphere_surface(grid.dimension() - 2);
  return solid * grid.dlambda() * (sq.matrix() * grid.theta_weights()).sum();
}

double spectral_gradient_energy(const SpectralField& w) {
  const auto& grid = *w.grid;
  const double nm2 = grid.dimension() - 2.0;
  const double nm1 = grid.dimension() - 1.0;
  const Eigen::VectorXd cot_like =
      grid.cos_theta().cwiseQuotient(grid.sin_theta());
  const Eigen::VectorXd inv_sin = grid.sin_theta().cwiseInverse();
  const Eigen::MatrixXd dth_t = grid.dtheta_matrix().transpose();
  const Eigen::VectorXcd mult =
      fft_derivative_multipliers(grid.nt(), grid.dt());

  const Eigen::MatrixXcd dw_rho_dt = scale_rows_c(w.w_rho, mult);
  const Eigen::MatrixXcd dw_theta_dt = scale_rows_c(w.w_theta, mult);
  const Eigen::MatrixXcd dw_phi_dt = scale_rows_c(w.w_phi, mult);
  const Eigen::MatrixXcd dwr_dth = w.w_rho * dth_t;
  const Eigen::MatrixXcd dwt_dth = w.w_theta * dth_t;
  const Eigen::MatrixXcd dwp_dth = w.w_phi * dth_t;
  const Eigen::MatrixXcd div_theta =
      dwt_dth + nm2 * scale_cols_c(w.w_theta, cot_like);

  Eigen::ArrayXXd integrand =
      dw_rho_dt.array().abs2() + dw_theta_dt.array().abs2() +
      dwr_dth.array().abs2() + dwt_dth.array().abs2() +
      w.w_theta.array().abs2() + nm1 * w.w_rho.array().abs2() +
      nm2 * scale_cols_c(w.w_theta, cot_like).array().abs2() +
      2.0 * ((w.w_rho.conjugate().array() * div_theta.array()).real() -
             (w.w_theta.conjugate().array() * dwr_dth.array()).real());

  integrand += dw_phi_dt.array().abs2() + dwp_dth.array().abs2() +
               nm2 * scale_cols_c(w.w_phi, inv_sin).array().abs2();

  const double solid = sphere_surface(grid.dimension() - 2);
  return solid * grid.dlambda() * (integrand.matrix() * grid.theta_weights()).sum();
}

double divfree_spectral_gradient_energy(const SpectralField& w,
                                        const Params& p) {
  const auto& grid = *w.grid;
  if (grid.dimension() != p.n) {
    throw std::invalid_argument("divfree energy: dimension mismatch");
  }
  const double nm2 = p.n - 2.0;
  const double c = 0.5 * p.n - p.gamma;
  const Eigen::VectorXd cot_like =
      grid.cos_theta().cwiseQuotient(grid.sin_theta());
  const Eigen::VectorXd inv_sin = grid.sin_theta().cwiseInverse();
  const Eigen::MatrixXd dth_t = grid.dtheta_matrix().transpose();

  const Eigen::MatrixXcd div_theta =
      w.w_theta * dth_t + nm2 * scale_cols_c(w.w_theta, cot_like);
  const Eigen::MatrixXcd ddiv_dth = div_theta * dth_t;

  const auto& lambdas = grid.lambdas();
  const auto& wq = grid.theta_weights();
  double total = 0.0;
  for (int j = 0; j < grid.nt(); ++j) {
    const double x = lambdas[j] * lambdas[j];
    const double pole = x + c * c;
    double row =
        (w.w_theta.row(j).array().abs2() * wq.transpose().array()).sum() *
        (x - p.n + 3.0);
    if (pole > 0.0) {
      const double c1 = (-p.n - 1.0 + x + 4.0 * p.gamma) / pole + 1.0;
      row +=
          (div_theta.row(j).array().abs2() * wq.transpose().array()).sum() * c1 +
          (ddiv_dth.row(j).array().abs2() * wq.transpose().array()).sum() / pole;
    }
    // decoupled azimuthal part
    const double row_phi =
        (w.w_phi.row(j).array().abs2() * wq.transpose().array()).sum() * x +
        ((w.w_phi.row(j) * dth_t).array().abs2() * wq.transpose().array())
            .sum() +
        nm2 * (w.w_phi.row(j).array().abs2() *
               inv_sin.array().square().transpose() * wq.transpose().array())
                  .sum();
    total += row + row_phi;
  }
  const double solid = sphere_surface(grid.dimension() - 2);
  return solid * grid.dlambda() * total;
}

QuotientReport rayleigh_quotient(const AxisymField& v) {
  const double den = weight_energy(v);
  if (den == 0.0) {
    throw std::domain_error("rayleigh_quotient: zero field");
  }
  const double num = gradient_energy(v);
  QuotientReport r;
  r.numerator = num;
  r.denominator = den;
  r.value = num / den;
  r.target = total_infimum(Params(v.grid->dimension(), v.gamma));
  return r;
}

}  // namespace hardyleray
