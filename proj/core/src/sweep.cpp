// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hardyleray/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hardyleray/constants.hpp"
#include "hardyleray/minimizing.hpp"
#include "hardyleray/operators.hpp"
#include "hardyleray/report.hpp"
#include "hardyleray/spectral.hpp"

namespace hardyleray {

const char* route_name(Route r) {
  switch (r) {
    case Route::ClosedForm: return "ClosedForm";
    case Route::SpectralOracle: return "SpectralOracle";
    case Route::FieldQuotient: return "FieldQuotient";
  }
  return "?";
}

std::vector<Route> RouteSet::list() const {
  std::vector<Route> out;
  if (closed_form) out.push_back(Route::ClosedForm);
  if (spectral_oracle) out.push_back(Route::SpectralOracle);
  if (field_quotient) out.push_back(Route::FieldQuotient);
  return out;
}

namespace {

std::string oracle_grid_descriptor(const SweepOptions& o) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "lambda[0,%g]x%d;nu<=%d", o.lambda_max,
                o.lambda_points, o.nu_max);
  return buf;
}

std::string field_grid_descriptor(const SweepOptions& o, int n) {
  char buf[96];
  if (n == 2) {
    std::snprintf(buf, sizeof buf, "nt=%d;nphi=%d;k=%g", o.nt, o.n_phi, o.k);
  } else {
    std::snprintf(buf, sizeof buf, "nt=%d;ntheta=%d;k=%g", o.nt, o.n_theta,
                  o.k);
  }
  return buf;
}

double field_quotient_constant(const Params& p, const SweepOptions& o) {
  double reduced;
  if (p.n == 2) {
    const bool nu_one = sharp_constant(p).branch == Branch::TwoD_NuOne;
    MinimizingSequenceSpec spec(
        nu_one ? MinimizingKind::PlanarNuOne : MinimizingKind::PlanarNuZero,
        o.k, p);
    const double t_half = suggested_t_half(spec);
    auto grid = std::make_shared<const PolarGrid2D>(-t_half, t_half, o.nt,
                                                    o.n_phi);
    reduced = rayleigh_quotient_2d(build_planar_minimizer(spec, grid)).value;
  } else {
    const bool poloidal = poloidal_infimum(p) <= azimuthal_infimum(p);
    MinimizingSequenceSpec spec(
        poloidal ? MinimizingKind::Poloidal : MinimizingKind::Azimuthal, o.k,
        p);
    const double t_half = suggested_t_half(spec);
    auto grid = make_grid(-t_half, t_half, o.nt, p.n, o.n_theta);
    reduced = rayleigh_quotient(build_axisym_minimizer(spec, grid)).value;
  }
  const double radial = p.radial_shift() * p.radial_shift();
  return 1.0 / (radial + reduced);
}

}  // namespace

std::vector<SweepRow> sweep_report(
    const std::vector<std::pair<int, double>>& p_list, const RouteSet& routes,
    const SweepOptions& opts) {
  if (p_list.empty()) {
    throw std::invalid_argument("sweep_report: empty parameter list");
  }
  if (routes.empty()) {
    throw std::invalid_argument("sweep_report: empty route set");
  }

  std::vector<SweepRow> rows;
  rows.reserve(p_list.size() * routes.list().size());
  for (const auto& [n, gamma] : p_list) {
    for (Route route : routes.list()) {
      SweepRow row;
      row.n = n;
      row.gamma = gamma;
      row.route = route;
      try {
        const Params p(n, gamma);
        const ConstantBreakdown closed = sharp_constant(p);
        row.branch = branch_name(closed.branch);
        row.target = closed.c;
        switch (route) {
          case Route::ClosedForm:
            row.c_value = closed.c;
            row.grid = "analytic";
            row.deviation = 0.0;
            row.status = "pass";
            break;
          case Route::SpectralOracle: {
            const auto brute = brute_force_infimum(
                p, opts.lambda_max, opts.nu_max, opts.lambda_points);
            const double radial = p.radial_shift() * p.radial_shift();
            row.c_value = 1.0 / (radial + brute.value);
            row.grid = oracle_grid_descriptor(opts);
            row.deviation = std::abs(*row.c_value - closed.c) / closed.c;
            row.status = *row.deviation <= opts.oracle_rtol ? "pass" : "fail";
            break;
          }
          case Route::FieldQuotient: {
            row.c_value = field_quotient_constant(p, opts);
            row.grid = field_grid_descriptor(opts, n);
            row.deviation = std::abs(*row.c_value - closed.c) / closed.c;
            row.status = *row.deviation <= opts.field_rtol ? "pass" : "fail";
            break;
          }
        }
      } catch (const std::exception&) {
        row.status = "error";
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

std::string opt17(const std::optional<double>& v) {
  return v ? fmt17(*v) : std::string();
}

std::string opt_json(const std::optional<double>& v) {
  return v ? fmt17(*v) : std::string("null");
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "n,gamma,route,C_value,target,deviation,branch,grid_descriptor,pass\n";
  for (const auto& r : rows) {
    os << r.n << ',' << fmt17(r.gamma) << ',' << route_name(r.route) << ','
       << opt17(r.c_value) << ',' << opt17(r.target) << ','
       << opt17(r.deviation) << ',' << r.branch << ',' << r.grid << ','
       << r.status << '\n';
  }
  return os.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "[\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "  {\"n\": " << r.n << ", \"gamma\": " << fmt17(r.gamma)
       << ", \"route\": \"" << route_name(r.route) << "\", \"C_value\": "
       << opt_json(r.c_value) << ", \"target\": " << opt_json(r.target)
       << ", \"deviation\": " << opt_json(r.deviation) << ", \"branch\": \""
       << json_escape(r.branch) << "\", \"grid_descriptor\": \""
       << json_escape(r.grid) << "\", \"pass\": \"" << r.status << "\"}"
       << (i + 1 < rows.size() ? ",\n" : "\n");
  }
  os << "]\n";
  return os.str();
}

}  // namespace hardyleray
