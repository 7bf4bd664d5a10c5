// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hardyleray/stream2d.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "hardyleray/constants.hpp"

namespace hardyleray {

namespace {

// C-infinity transition: 0 for u <= 0, 1 for u >= 1.
double smooth01(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / u);
  const double b = std::exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

double falling_cutoff(double r, double r0, double r1) {
  return smooth01((r1 - r) / (r1 - r0));
}

double rising_cutoff(double r, double r0, double r1) {
  return smooth01((r - r0) / (r1 - r0));
}

struct QuotientSums {
  double lhs = 0.0;
  double rhs = 0.0;
};

// Zero-padded access keeps the stencils valid on the (zero) margin.
inline double at(const Eigen::MatrixXd& p, int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) return 0.0;
  return p(i, j);
}

}  // namespace

void StreamField2D::validate() const {
  if (nx < 16 || spacing <= 0.0) {
    throw std::domain_error("StreamField2D: degenerate grid");
  }
  const double scale = max_abs();
  if (scale == 0.0) return;
  for (int ring = 0; ring < 2; ++ring) {
    const int hi = nx - 1 - ring;
    for (int i = 0; i < nx; ++i) {
      if (psi(ring, i) != 0.0 || psi(hi, i) != 0.0 || psi(i, ring) != 0.0 ||
          psi(i, hi) != 0.0) {
        throw std::domain_error("StreamField2D: nonzero boundary margin");
      }
    }
  }
  if (gamma < 0.0) {
    const int c = nx / 2;
    for (int i : {c - 1, c}) {
      for (int j : {c - 1, c}) {
        const double gx = (at(psi, nx, i + 1, j) - at(psi, nx, i - 1, j)) /
                          (2.0 * spacing);
        const double gy = (at(psi, nx, i, j + 1) - at(psi, nx, i, j - 1)) /
                          (2.0 * spacing);
        if (std::hypot(gx, gy) > 1e-10 * scale) {
          throw std::domain_error(
              "StreamField2D: gradient near the origin must vanish for "
              "gamma < 0");
        }
      }
    }
  }
}

StreamField2D random_divfree_2d(std::uint64_t seed, int num_bumps,
                                const Params& p, StreamFieldOptions opts) {
  if (p.n != 2) throw std::invalid_argument("random_divfree_2d: need n = 2");
  if (num_bumps < 1) {
    throw std::invalid_argument("random_divfree_2d: need num_bumps >= 1");
  }
  const double ext = opts.half_extent;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double r_lo = p.gamma < 0.0 ? 0.30 * ext : 0.05 * ext;
  std::uniform_real_distribution<double> radius(r_lo, 0.55 * ext);
  std::uniform_real_distribution<double> width(0.05 * ext, 0.12 * ext);
  std::uniform_real_distribution<double> amplitude(-1.0, 1.0);

  struct Bump {
    double cx, cy, inv2s2, a;
  };
  std::vector<Bump> bumps(num_bumps);
  for (auto& b : bumps) {
    const double r = radius(rng);
    const double th = angle(rng);
    const double s = width(rng);
    double a = amplitude(rng);
    if (std::abs(a) < 0.1) a = a < 0 ? a - 0.1 : a + 0.1;
    b = {r * std::cos(th), r * std::sin(th), 0.5 / (s * s), a};
  }

  StreamField2D f;
  f.nx = opts.nx;
  f.spacing = 2.0 * ext / opts.nx;
  f.gamma = p.gamma;
  f.psi.resize(opts.nx, opts.nx);
  for (int i = 0; i < opts.nx; ++i) {
    const double x = f.coord(i);
    for (int j = 0; j < opts.nx; ++j) {
      const double y = f.coord(j);
      const double r = std::hypot(x, y);
      double cut = falling_cutoff(r, 0.60 * ext, 0.85 * ext);
      if (p.gamma < 0.0) cut *= rising_cutoff(r, 0.08 * ext, 0.20 * ext);
      if (cut == 0.0) {
        f.psi(i, j) = 0.0;
        continue;
      }
      double v = 0.0;
      for (const auto& b : bumps) {
        const double dx = x - b.cx;
        const double dy = y - b.cy;
        v += b.a * std::exp(-(dx * dx + dy * dy) * b.inv2s2);
      }
      f.psi(i, j) = v * cut;
    }
  }
  return f;
}

StreamField2D stream_from_log_profile(double gamma, double r_a, double r_b,
                                      StreamFieldOptions opts) {
  if (!(0.0 < r_a && r_a < r_b && r_b < opts.half_extent)) {
    throw std::invalid_argument("stream_from_log_profile: bad radii");
  }
  const double tau_a = std::log(r_a);
  const double tau_b = std::log(r_b);
  const double omega = std::numbers::pi / (tau_b - tau_a);
  const double e = 1.0 - gamma;
  // Antiderivative of e^{e tau} sin(omega (tau - tau_a)).
  auto anti = [&](double tau) {
    const double ph = omega * (tau - tau_a);
    return std::exp(e * tau) * (e * std::sin(ph) - omega * std::cos(ph)) /
           (e * e + omega * omega);
  };
  const double top = anti(tau_b);
  const double plateau = top - anti(tau_a);

  StreamField2D f;
  f.nx = opts.nx;
  f.spacing = 2.0 * opts.half_extent / opts.nx;
  f.gamma = gamma;
  f.psi.resize(opts.nx, opts.nx);
  for (int i = 0; i < opts.nx; ++i) {
    const double x = f.coord(i);
    for (int j = 0; j < opts.nx; ++j) {
      const double r = std::hypot(x, f.coord(j));
      if (r >= r_b) {
        f.psi(i, j) = 0.0;
      } else if (r <= r_a) {
        f.psi(i, j) = plateau;
      } else {
        f.psi(i, j) = top - anti(std::log(r));
      }
    }
  }
  return f;
}

namespace {

// Both checks accumulate over the same nodes in the same order; the vector
// route composes first differences of u = curl psi while the stream route
// uses the second-derivative stencils directly, and the two sets of terms
// coincide identically on a tensor grid.
template <typename TermFn>
QuotientSums accumulate(const StreamField2D& f, TermFn&& term) {
  QuotientSums s;
  const int n = f.nx;
  const double cell = f.spacing * f.spacing;
  for (int i = 0; i < n; ++i) {
    const double x = f.coord(i);
    for (int j = 0; j < n; ++j) {
      const double y = f.coord(j);
      const double r2 = x * x + y * y;
      term(i, j, r2, s);
    }
  }
  s.lhs *= cell;
  s.rhs *= cell;
  return s;
}

}  // namespace

QuotientReport check_inequality_2d(const StreamField2D& f) {
  f.validate();
  const int n = f.nx;
  const double h = f.spacing;
  const auto& p = f.psi;
  const double g = f.gamma;
  const QuotientSums s = accumulate(f, [&](int i, int j, double r2,
                                           QuotientSums& acc) {
    const double u1 = (at(p, n, i, j + 1) - at(p, n, i, j - 1)) / (2.0 * h);
    const double u2 = -(at(p, n, i + 1, j) - at(p, n, i - 1, j)) / (2.0 * h);
    const double du1_dx = (at(p, n, i + 1, j + 1) - at(p, n, i + 1, j - 1) -
                           at(p, n, i - 1, j + 1) + at(p, n, i - 1, j - 1)) /
                          (4.0 * h * h);
    const double du1_dy =
        (at(p, n, i, j + 2) - 2.0 * at(p, n, i, j) + at(p, n, i, j - 2)) /
        (4.0 * h * h);
    const double du2_dx =
        -(at(p, n, i + 2, j) - 2.0 * at(p, n, i, j) + at(p, n, i - 2, j)) /
        (4.0 * h * h);
    const double du2_dy = -du1_dx;
    const double wr = std::pow(r2, g);
    acc.lhs += (u1 * u1 + u2 * u2) * wr / r2;
    acc.rhs += (du1_dx * du1_dx + du1_dy * du1_dy + du2_dx * du2_dx +
                du2_dy * du2_dy) *
               wr;
  });
  if (s.lhs == 0.0) throw std::domain_error("check_inequality_2d: zero field");
  QuotientReport r;
  r.numerator = s.rhs;
  r.denominator = s.lhs;
  r.value = s.rhs / s.lhs;
  r.target = sharp_constant(Params(2, f.gamma)).c_inverse;
  return r;
}

QuotientReport check_stream_form(const StreamField2D& f) {
  f.validate();
  const int n = f.nx;
  const double h = f.spacing;
  const auto& p = f.psi;
  const double g = f.gamma;
  const QuotientSums s = accumulate(f, [&](int i, int j, double r2,
                                           QuotientSums& acc) {
    const double px = (at(p, n, i + 1, j) - at(p, n, i - 1, j)) / (2.0 * h);
    const double py = (at(p, n, i, j + 1) - at(p, n, i, j - 1)) / (2.0 * h);
    const double pxx =
        (at(p, n, i + 2, j) - 2.0 * at(p, n, i, j) + at(p, n, i - 2, j)) /
        (4.0 * h * h);
    const double pyy =
        (at(p, n, i, j + 2) - 2.0 * at(p, n, i, j) + at(p, n, i, j - 2)) /
        (4.0 * h * h);
    const double pxy = (at(p, n, i + 1, j + 1) - at(p, n, i + 1, j - 1) -
                        at(p, n, i - 1, j + 1) + at(p, n, i - 1, j - 1)) /
                       (4.0 * h * h);
    const double wr = std::pow(r2, g);
    acc.lhs += (px * px + py * py) * wr / r2;
    acc.rhs += (pxx * pxx + 2.0 * pxy * pxy + pyy * pyy) * wr;
  });
  if (s.lhs == 0.0) throw std::domain_error("check_stream_form: zero field");
  QuotientReport r;
  r.numerator = s.rhs;
  r.denominator = s.lhs;
  r.value = s.rhs / s.lhs;
  r.target = sharp_constant(Params(2, f.gamma)).c_inverse;
  return r;
}

}  // namespace hardyleray
