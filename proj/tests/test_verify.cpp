// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardyleray/constants.hpp"
#include "hardyleray/minimizing.hpp"
#include "hardyleray/numerics.hpp"
#include "hardyleray/operators.hpp"
#include "hardyleray/polar2d.hpp"
#include "hardyleray/spectral.hpp"
#include "hardyleray/stream2d.hpp"
#include "hardyleray/sweep.hpp"

using namespace hardyleray;

namespace {

double ladder_quotient(const MinimizingSequenceSpec& spec, int nt, int n_ang) {
  const double t_half = suggested_t_half(spec);
  if (spec.params.n == 2) {
    auto grid = std::make_shared<const PolarGrid2D>(-t_half, t_half, nt, n_ang);
    return rayleigh_quotient_2d(build_planar_minimizer(spec, grid)).value;
  }
  auto grid = make_grid(-t_half, t_half, nt, spec.params.n, n_ang);
  return rayleigh_quotient(build_axisym_minimizer(spec, grid)).value;
}

}  // namespace

TEST_CASE("minimizing sequence specs are validated") {
  const Params p3(3, 0.0);
  const Params p2(2, -1.0);
  CHECK_THROWS_AS(MinimizingSequenceSpec(MinimizingKind::Poloidal, 0.5, p3),
                  std::invalid_argument);
  CHECK_THROWS_AS(MinimizingSequenceSpec(MinimizingKind::PlanarNuOne, 4.0, p3),
                  std::invalid_argument);
  CHECK_THROWS_AS(MinimizingSequenceSpec(MinimizingKind::Azimuthal, 4.0, p2),
                  std::invalid_argument);
}

TEST_CASE("a too-narrow grid is rejected") {
  const Params p(3, 0.0);
  auto grid = make_grid(-8.0, 8.0, 128, 3, 48);
  CHECK_THROWS_AS(build_axisym_minimizer(
                      MinimizingSequenceSpec(MinimizingKind::Poloidal, 8.0, p),
                      grid),
                  std::domain_error);
}

TEST_CASE("poloidal sequence approaches the sharp value quadratically") {
  const Params p(3, 0.0);
  const double target = total_infimum(p);
  double prev_gap = 0.0;
  for (int step = 0; step < 2; ++step) {
    const double k = step == 0 ? 4.0 : 8.0;
    const double q = ladder_quotient(
        MinimizingSequenceSpec(MinimizingKind::Poloidal, k, p), 1024, 96);
    const double gap = q - target;
    CHECK(q > target);
    if (step == 1) {
      const double ratio = prev_gap / gap;
      CHECK(ratio > 3.0);
      CHECK(ratio < 5.0);
    }
    prev_gap = gap;
  }
}

TEST_CASE("azimuthal sequence converges to n - 1, not the sharp value") {
  // for gamma <= 1 the azimuthal branch exceeds the poloidal one
  const Params p(3, 0.0);
  const double q = ladder_quotient(
      MinimizingSequenceSpec(MinimizingKind::Azimuthal, 8.0, p), 1024, 96);
  CHECK(rel_close(q, 2.0, 1e-2));
  CHECK(q > total_infimum(p));
  // for gamma > 1 at n = 3 it is the minimizing branch
  const Params pg(3, 2.0);
  const double qg = ladder_quotient(
      MinimizingSequenceSpec(MinimizingKind::Azimuthal, 8.0, pg), 1024, 96);
  CHECK(qg > 2.0);
  CHECK(rel_close(qg, total_infimum(pg), 1e-2));
}

TEST_CASE("planar sequences for both branches") {
  {
    const Params p(2, 2.0);  // nu = 0 branch, infimum 1
    const double q = ladder_quotient(
        MinimizingSequenceSpec(MinimizingKind::PlanarNuZero, 8.0, p), 1024, 64);
    CHECK(q > 1.0);
    CHECK(rel_close(q, 1.0, 1e-2));
  }
  {
    const Params p(2, -1.0);  // nu = 1 branch, infimum 2/5
    const MinimizingSequenceSpec spec(MinimizingKind::PlanarNuOne, 8.0, p,
                                      0.83);
    const double q = ladder_quotient(spec, 1024, 64);
    CHECK(q > 0.4);
    CHECK(rel_close(q, 0.4, 5e-2));
  }
}

TEST_CASE("planar nu=1 sequence satisfies the divergence constraint") {
  const Params p(2, -1.0);
  const MinimizingSequenceSpec spec(MinimizingKind::PlanarNuOne, 4.0, p, 0.2);
  auto grid = std::make_shared<const PolarGrid2D>(-26.0, 26.0, 512, 64);
  const auto v = build_planar_minimizer(spec, grid);
  CHECK(divergence_residual_2d(v).cwiseAbs().maxCoeff() <=
        1e-10 * v.max_abs());
  // scale invariance, exact under power-of-two scaling
  PolarField2D s = v;
  s.v_rho *= 4.0;
  s.v_phi *= 4.0;
  CHECK(rayleigh_quotient_2d(s).value == rayleigh_quotient_2d(v).value);
}

TEST_CASE("random stream functions") {
  const Params p1(2, 1.0);
  const auto a = random_divfree_2d(7, 6, p1);
  const auto b = random_divfree_2d(7, 6, p1);
  CHECK(a.psi == b.psi);  // deterministic per seed
  CHECK(a.psi.cwiseAbs().maxCoeff() > 0.0);
  a.validate();

  // discrete curl is divergence free identically: the mixed centered
  // differences commute on a tensor grid
  const int n = a.nx;
  const double h = a.spacing;
  double max_div = 0.0;
  for (int i = 2; i < n - 2; ++i) {
    for (int j = 2; j < n - 2; ++j) {
      const double u1x =
          (a.psi(i + 1, j + 1) - a.psi(i + 1, j - 1) - a.psi(i - 1, j + 1) +
           a.psi(i - 1, j - 1)) /
          (4.0 * h * h);
      const double u2y = -u1x;
      max_div = std::max(max_div, std::abs(u1x + u2y));
    }
  }
  CHECK(max_div == 0.0);

  // gamma < 0 keeps a cleared neighborhood of the origin
  const auto c = random_divfree_2d(11, 6, Params(2, -1.0));
  c.validate();
  const int mid = c.nx / 2;
  for (int i = mid - 3; i <= mid + 3; ++i) {
    for (int j = mid - 3; j <= mid + 3; ++j) {
      CHECK(c.psi(i, j) == 0.0);
    }
  }
}

TEST_CASE("stream quotients stay above the inverse constant") {
  for (double gamma : {-1.0, 0.5, 1.0, 2.0}) {
    const Params p(2, gamma);
    const double floor = sharp_constant(p).c_inverse;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      const auto f = random_divfree_2d(seed, 6, p);
      const auto r = check_inequality_2d(f);
      CHECK(r.target == doctest::Approx(floor).epsilon(1e-14));
      CHECK(r.value >= floor * (1.0 - 0.02));
    }
  }
  // a single off-center bump at gamma = 1 sits above 1/C = 2
  const auto one = random_divfree_2d(5, 1, Params(2, 1.0));
  CHECK(check_inequality_2d(one).value >= 2.0);
}

TEST_CASE("vector route and stream route agree on the same field") {
  const Params p(2, 1.0);
  for (std::uint64_t seed = 3; seed <= 12; ++seed) {
    const auto f = random_divfree_2d(seed, 5, p);
    const auto vec = check_inequality_2d(f);
    const auto str = check_stream_form(f);
    CHECK(rel_close(vec.value, str.value, 1e-6));
    CHECK(vec.numerator == doctest::Approx(str.numerator).epsilon(1e-13));
  }
}

TEST_CASE("stream checks reject empty fields") {
  StreamField2D f;
  f.nx = 64;
  f.spacing = 1.0 / 32.0;
  f.gamma = 1.0;
  f.psi = Eigen::MatrixXd::Zero(64, 64);
  CHECK_THROWS_AS(check_inequality_2d(f), std::domain_error);
  CHECK_THROWS_AS(check_stream_form(f), std::domain_error);
}

TEST_CASE("stream quotient is scale invariant") {
  const Params p(2, 0.5);
  auto f = random_divfree_2d(21, 6, p);
  const double before = check_inequality_2d(f).value;
  f.psi *= 16.0;
  CHECK(check_inequality_2d(f).value == before);
}

TEST_CASE("radial log profile drives the quotient to the nu = 0 branch") {
  // gamma = 2: target 1/C = gamma^2 + 1 = 5, approached like
  // (pi / log(r_b/r_a))^2 as the support widens over decades
  StreamFieldOptions opts{8192, 1.0};
  const double h = 2.0 * opts.half_extent / opts.nx;
  const auto f = stream_from_log_profile(2.0, 4.0 * h, 0.92, opts);
  const auto r = check_inequality_2d(f);
  CHECK(r.target == doctest::Approx(5.0));
  CHECK(r.value >= 5.0 * (1.0 - 1e-9));
  CHECK(std::abs(r.value - 5.0) / 5.0 <= 0.05);
  // the stream route sees the same numbers
  const auto s = check_stream_form(f);
  CHECK(rel_close(r.value, s.value, 1e-6));
}

TEST_CASE("sweep report across routes") {
  CHECK_THROWS_AS(sweep_report({}, RouteSet::all()), std::invalid_argument);
  CHECK_THROWS_AS(sweep_report({{3, 0.0}}, RouteSet{}), std::invalid_argument);

  SweepOptions opts;
  opts.nt = 512;
  opts.n_theta = 96;
  opts.k = 8.0;

  SUBCASE("single parameter, all routes") {
    const auto rows = sweep_report({{3, 0.0}}, RouteSet::all(), opts);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
      CHECK(r.status == "pass");
      CHECK(r.branch == "PoloidalGammaLE1");
      CHECK(*r.target == doctest::Approx(2.72));
    }
    CHECK(*rows[0].c_value == doctest::Approx(2.72).epsilon(1e-14));
    CHECK(*rows[1].deviation <= 1e-6);
    CHECK(*rows[2].deviation <= 5e-2);
  }

  SUBCASE("forbidden gamma becomes an error row") {
    const auto rows =
        sweep_report({{2, 0.0}, {2, -1.0}}, {true, true, false}, opts);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].status == "error");
    CHECK(rows[1].status == "error");
    CHECK(rows[2].status == "pass");
    CHECK(rows[3].status == "pass");
    CHECK(rows[2].branch == "TwoD_NuOne");
  }

  SUBCASE("branch labels flip at the interval endpoints") {
    std::vector<std::pair<int, double>> plist;
    const int count = 41;
    for (int i = 0; i < count; ++i) {
      plist.emplace_back(2, -3.0 + 4.0 * i / (count - 1));
    }
    const auto rows = sweep_report(plist, {true, false, false}, opts);
    const double s3 = std::sqrt(3.0);
    for (const auto& r : rows) {
      if (r.status != "pass") continue;
      const bool inside = r.gamma >= -s3 - 1.0 && r.gamma <= s3 - 1.0;
      CHECK(r.branch == (inside ? "TwoD_NuOne" : "TwoD_NuZero"));
    }
  }

  SUBCASE("branch labels flip at gamma = 1 for n = 3") {
    std::vector<std::pair<int, double>> plist;
    for (int i = 0; i <= 20; ++i) plist.emplace_back(3, 0.5 + 0.05 * i);
    const auto rows = sweep_report(plist, {true, false, false}, opts);
    for (const auto& r : rows) {
      CHECK(r.branch == (r.gamma <= 1.0 ? "PoloidalGammaLE1"
                                        : "GammaGT1TwoLevelMin"));
    }
  }

  SUBCASE("csv and json are stable and carry the full schema") {
    const auto rows = sweep_report({{3, 0.0}}, {true, true, false}, opts);
    const std::string csv = sweep_csv(rows);
    CHECK(csv.rfind("n,gamma,route,C_value,target,deviation,branch,"
                    "grid_descriptor,pass\n",
                    0) == 0);
    CHECK(csv == sweep_csv(rows));
    const std::string js = sweep_json(rows);
    CHECK(js.find("\"route\": \"SpectralOracle\"") != std::string::npos);
    CHECK(js.find("\"pass\": \"pass\"") != std::string::npos);
  }
}
