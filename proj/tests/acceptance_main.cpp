// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite: one line per criterion, nonzero exit when
// any of them fails. Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hardyleray/constants.hpp"
#include "hardyleray/minimizing.hpp"
#include "hardyleray/numerics.hpp"
#include "hardyleray/operators.hpp"
#include "hardyleray/polar2d.hpp"
#include "hardyleray/spectral.hpp"
#include "hardyleray/stream2d.hpp"

using namespace hardyleray;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void note(const std::string& what) {
    if (ok && detail.empty()) detail = what;
  }
};

bool scaled_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// --- 1. headline constant ---------------------------------------------

Check criterion_headline() {
  Check c;
  const auto b = sharp_constant(Params(3, 0.0));
  if (!(std::abs(b.c - 68.0 / 25.0) <= 1e-14 * 2.72)) {
    c.fail("C(3,0) != 68/25");
  }
  if (!(std::abs(improvement_ratio(Params(3, 0.0)) - 17.0 / 25.0) <=
        1e-14)) {
    c.fail("ratio(3,0) != 17/25");
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "C(3,0) = %.17g", b.c);
  c.note(buf);
  return c;
}

// --- 2. formula consistency -------------------------------------------

Check criterion_formulas() {
  Check c;
  std::mt19937_64 rng(20260811);
  std::uniform_real_distribution<double> gam(-5.0, 5.0);
  std::uniform_int_distribution<int> dim(3, 10);
  int done = 0;
  double worst3d = 0.0;
  while (done < 500) {
    const int n = dim(rng);
    const double g = gam(rng);
    if (g == forbidden_gamma(n)) continue;
    const Params p(n, g);
    const auto b = sharp_constant(p);
    if (!(b.c > 0.0) || !(b.c < classical_constant(p))) {
      c.fail("breakdown invariant violated");
    }
    if (n == 3) {
      const double dev = rel_diff(sharp_constant_3d(g), b.c);
      worst3d = std::max(worst3d, dev);
      if (dev > 1e-12) c.fail("3d specialization deviates");
    }
    ++done;
  }
  for (int n = 3; n <= 12; ++n) {
    const double below = sharp_constant(Params(n, 1.0)).c;
    const double above = sharp_constant(Params(n, std::nextafter(1.0, 2.0))).c;
    if (rel_diff(below, above) > 1e-10) c.fail("gamma = 1 branch jump");
  }
  const double s3 = std::sqrt(3.0);
  for (double g0 : {-1.0 - s3, s3 - 1.0}) {
    const double m = (1.0 - g0) * (1.0 - g0);
    const double nu1 = 1.0 / (g0 * g0) * (1.0 + m) / (3.0 + m);
    const double nu0 = 1.0 / (g0 * g0 + 1.0);
    if (rel_diff(nu0, nu1) > 1e-10) c.fail("2d interval endpoint jump");
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "500 pairs, worst 3d deviation %.2e", worst3d);
  c.note(buf);
  return c;
}

// --- 3. oracle equivalence --------------------------------------------

Check criterion_oracle() {
  Check c;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> gam(-5.0, 5.0);
  const int dims[] = {2, 3, 4, 5, 8};
  double worst = 0.0;
  int done = 0;
  while (done < 50) {
    const int n = dims[done % 5];
    const double g = gam(rng);
    if (std::abs(g - forbidden_gamma(n)) < 1e-3) continue;
    const Params p(n, g);
    const double dev =
        rel_diff(brute_force_infimum(p, 10.0, 64, 2001).value, total_infimum(p));
    worst = std::max(worst, dev);
    if (dev > 1e-6) c.fail("oracle deviates at n=" + std::to_string(n));
    ++done;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "50 params, worst deviation %.2e", worst);
  c.note(buf);
  return c;
}

// --- 4. algebraic identities ------------------------------------------

Check criterion_identities() {
  Check c;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> gam(-5.0, 5.0);
  std::uniform_real_distribution<double> lam(0.0, 10.0);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const double g = gam(rng);
    if (g == forbidden_gamma(n) || g == 0.5 * n) continue;
    const Params p(n, g);
    const SpectralPoint s(lam(rng), 1 + static_cast<int>(rng() % 16), p);
    const double q = poloidal_mode_quotient(s, p).value;
    const double f = poloidal_objective(s.lambda * s.lambda, s.alpha, p);
    const double err =
        std::abs(q - f) / (1.0 + std::max(std::abs(q), std::abs(f)));
    worst = std::max(worst, err);
    if (err > 1e-12) c.fail("quotient/objective identity");
  }
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const double g = gam(rng);
    if (g == forbidden_gamma(n)) continue;
    const Params p(n, g);
    const double sshift = p.radial_shift();
    const double d = g - 0.5 * n;
    const double closed = 2.0 * sshift * sshift / (n - 1.0 + d * d);
    if (!scaled_close(poloidal_objective(0.0, n - 1.0, p), closed, 1e-12)) {
      c.fail("lowest-mode closed form");
    }
  }
  // monotonicity in the angular eigenvalue for both branches
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const double gle = -5.0 + 6.0 * (trial % 100) / 99.0;  // <= 1
    const double ggt = 1.0 + 4.0 * (trial % 100) / 99.0 + 1e-9;
    const double x = 30.0 * (trial % 7) / 6.0;
    for (int nu = 1; nu <= 10; ++nu) {
      const double lo = nu * (nu + n - 2.0);
      const double hi = (nu + 1.0) * (nu + 1.0 + n - 2.0);
      if (std::abs(gle - forbidden_gamma(n)) > 1e-9 &&
          poloidal_objective(0.0, hi, Params(n, gle)) <=
              poloidal_objective(0.0, lo, Params(n, gle))) {
        c.fail("monotonicity, gamma <= 1");
      }
      if (poloidal_objective(x, hi, Params(n, ggt)) <=
          poloidal_objective(x, lo, Params(n, ggt))) {
        c.fail("monotonicity, gamma > 1");
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "1e4 samples, worst identity error %.2e",
                worst);
  c.note(buf);
  return c;
}

// --- 5. operator spectrum ---------------------------------------------

Check criterion_spectrum() {
  Check c;
  double worst = 0.0;
  for (int n : {3, 4, 5}) {
    auto g = make_grid(-1.0, 1.0, 2, n, 256);
    const Eigen::VectorXd ev = theta_spectrum(*g, 5);
    for (int nu = 1; nu <= 5; ++nu) {
      const double dev = rel_diff(ev[nu - 1], nu * (nu + n - 2.0));
      worst = std::max(worst, dev);
      if (dev > 1e-6) c.fail("eigenvalue nu=" + std::to_string(nu));
    }
    const Eigen::VectorXd tsin = theta_energy_composed(*g, g->sin_theta());
    const double point =
        (tsin - (n - 1.0) * g->sin_theta()).cwiseAbs().maxCoeff();
    if (point > 1e-8) c.fail("action on sin theta");
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "worst eigenvalue deviation %.2e", worst);
  c.note(buf);
  return c;
}

// --- 6. Plancherel and energy identities ------------------------------

Check criterion_energy_identities() {
  Check c;
  double worst_plancherel = 0.0, worst_energy = 0.0;
  const std::vector<Params> batches = {Params(3, 0.0), Params(3, 0.8),
                                       Params(4, 0.5), Params(5, -1.0)};
  std::uint64_t seed = 600;
  for (const Params& p : batches) {
    const double th = suggested_t_half_divfree(p);
    auto grid = make_grid(-th, th, 1024, p.n, 256);
    for (int i = 0; i < 25; ++i) {
      const auto v = random_divfree_axisym(seed++, p, grid);
      const auto w = to_spectral(v);
      const Eigen::ArrayXXd sq = v.v_rho.array().square() +
                                 v.v_theta.array().square() +
                                 v.v_phi.array().square();
      const double solid = sphere_surface(p.n - 2);
      const double t_side =
          solid * grid->dt() * (sq.matrix() * grid->theta_weights()).sum();
      const double dev_p = rel_diff(t_side, spectral_weight_energy(w));
      worst_plancherel = std::max(worst_plancherel, dev_p);
      if (dev_p > 1e-10) c.fail("Plancherel identity");

      const double dev_e =
          rel_diff(gradient_energy(v), divfree_spectral_gradient_energy(w, p));
      worst_energy = std::max(worst_energy, dev_e);
      if (dev_e > 1e-8) c.fail("gradient energy identity");
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "100 fields, worst plancherel %.2e, worst energy %.2e",
                worst_plancherel, worst_energy);
  c.note(buf);
  return c;
}

// --- 7. sharpness ladders ---------------------------------------------

Check criterion_sharpness() {
  Check c;
  struct Protocol {
    MinimizingKind kind;
    Params p;
    double phi0;
  };
  const std::vector<Protocol> protocols = {
      {MinimizingKind::Poloidal, Params(3, 0.0), 0.0},
      {MinimizingKind::Azimuthal, Params(3, 2.0), 0.0},
      {MinimizingKind::PlanarNuOne, Params(2, -1.0), 0.4},
      {MinimizingKind::PlanarNuZero, Params(2, 2.0), 0.0},
  };
  std::string summary;
  for (const auto& proto : protocols) {
    const double t_half =
        suggested_t_half(MinimizingSequenceSpec(proto.kind, 32.0, proto.p));
    std::vector<double> gaps;
    double target = 0.0;
    for (double k : {8.0, 16.0, 32.0}) {
      const MinimizingSequenceSpec spec(proto.kind, k, proto.p, proto.phi0);
      QuotientReport r;
      if (proto.p.n == 2) {
        auto grid =
            std::make_shared<const PolarGrid2D>(-t_half, t_half, 2048, 256);
        r = rayleigh_quotient_2d(build_planar_minimizer(spec, grid));
      } else {
        auto grid = make_grid(-t_half, t_half, 2048, proto.p.n, 256);
        r = rayleigh_quotient(build_axisym_minimizer(spec, grid));
      }
      target = r.target;
      if (!(r.value > r.target)) c.fail("quotient not above the target");
      gaps.push_back(r.gap());
    }
    for (size_t i = 1; i < gaps.size(); ++i) {
      const double ratio = gaps[i - 1] / gaps[i];
      if (!(ratio >= 3.0 && ratio <= 5.0)) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s gap ratio %.2f outside [3,5]",
                      minimizing_kind_name(proto.kind), ratio);
        c.fail(buf);
      }
    }
    const double final_gap = gaps.back() / target;
    if (!(final_gap <= 0.01)) {
      c.fail(std::string(minimizing_kind_name(proto.kind)) +
             " final gap above 1%");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s %.2e  ",
                  minimizing_kind_name(proto.kind), final_gap);
    summary += buf;
  }
  c.note("final relative gaps: " + summary);
  return c;
}

// --- 8. never-violated quotient floors --------------------------------

Check criterion_floors() {
  Check c;
  double min_margin_2d = 1e9;
  double worst_route = 0.0;
  for (double gamma : {-1.0, 0.5, 1.0, 2.0}) {
    const Params p(2, gamma);
    const double floor = sharp_constant(p).c_inverse;
    for (std::uint64_t seed = 1; seed <= 125; ++seed) {
      const auto f = random_divfree_2d(seed, 6, p);
      const auto vec = check_inequality_2d(f);
      const auto str = check_stream_form(f);
      worst_route = std::max(worst_route, rel_diff(vec.value, str.value));
      min_margin_2d = std::min(min_margin_2d, vec.value / floor);
      if (vec.value < floor * (1.0 - 0.02)) c.fail("2d quotient below floor");
      if (rel_diff(vec.value, str.value) > 1e-6) c.fail("route mismatch");
    }
  }
  double min_margin_3d = 1e9;
  for (double gamma : {0.0, 2.0}) {
    const Params p(3, gamma);
    const double th = suggested_t_half_divfree(p);
    auto grid = make_grid(-th, th, 1024, 3, 256);
    const double floor = total_infimum(p);
    for (std::uint64_t seed = 9000; seed < 9050; ++seed) {
      const auto v = random_divfree_axisym(seed, p, grid);
      const auto r = rayleigh_quotient(v);
      min_margin_3d = std::min(min_margin_3d, r.value / floor);
      if (r.value < floor * (1.0 - 0.02)) c.fail("3d quotient below floor");
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "600 fields, min quotient/floor 2d %.3f, 3d %.3f, "
                "worst route dev %.1e",
                min_margin_2d, min_margin_3d, worst_route);
  c.note(buf);
  return c;
}

// --- 9. CLI end to end --------------------------------------------------

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(HARDYLERAY_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  return {WEXITSTATUS(pclose(pipe)), out};
}

Check criterion_cli() {
  Check c;
  const std::vector<std::pair<std::string, int>> runs = {
      {"constant -n 3 -g 0", 0},
      {"constant -n 3 -g -0.5", 2},
      {"reduce -n 3 -g 0 --output csv", 0},
      {"verify -n 3 -g 0 -k 4 --nt 512 --ntheta 64 --output json", 0},
      {"sweep -n 2 -g -2:1:7 --routes closed,oracle --output csv", 0},
      {"random-test -n 2 -g 1 --trials 10 --seed 5 --stream-nx 128", 0},
      {"random-test -n 3 -g 0 --trials 4 --seed 5 --nt 512 --ntheta 96", 0},
  };
  for (const auto& [args, expected] : runs) {
    const CliRun first = run_cli(args);
    if (first.code != expected) {
      c.fail("exit " + std::to_string(first.code) + " != " +
             std::to_string(expected) + " for: " + args);
      continue;
    }
    const CliRun second = run_cli(args);
    if (second.out != first.out) c.fail("nondeterministic output: " + args);
  }
  const CliRun headline = run_cli("constant -n 3 -g 0");
  if (headline.out.find("2.72") == std::string::npos) {
    c.fail("headline constant not printed");
  }
  c.note("5 commands, deterministic reruns, documented exit codes");
  return c;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"headline constant 68/25", criterion_headline},
      {"closed-form consistency across branches", criterion_formulas},
      {"grid oracle matches the closed-form infimum", criterion_oracle},
      {"algebraic identity suite", criterion_identities},
      {"discretized operator spectrum", criterion_spectrum},
      {"Plancherel and gradient-energy identities", criterion_energy_identities},
      {"minimizing-sequence sharpness ladders", criterion_sharpness},
      {"quotient floors never violated", criterion_floors},
      {"CLI end to end", criterion_cli},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s  %zu. %s [%.1fs] %s\n", c.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, c.detail.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
  }
  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("acceptance: %d criteria FAILED\n", failures);
  }
  return failures;
}
