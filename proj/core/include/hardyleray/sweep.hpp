// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_SWEEP_HPP
#define HARDYLERAY_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "hardyleray/params.hpp"

namespace hardyleray {

enum class Route { ClosedForm, SpectralOracle, FieldQuotient };

const char* route_name(Route r);

struct RouteSet {
  bool closed_form = false;
  bool spectral_oracle = false;
  bool field_quotient = false;

  static RouteSet all() { return {true, true, true}; }
  bool empty() const {
    return !closed_form && !spectral_oracle && !field_quotient;
  }
  std::vector<Route> list() const;

  friend bool operator==(const RouteSet&, const RouteSet&) = default;
};

/// Knobs for the non-closed-form routes, pinned so sweeps are reproducible.
struct SweepOptions {
  // spectral oracle grid
  double lambda_max = 10.0;
  int lambda_points = 2001;
  int nu_max = 64;
  double oracle_rtol = 1e-6;
  // field quotient (minimizing field at fixed k)
  double k = 16.0;
  int nt = 1024;
  int n_theta = 128;
  int n_phi = 64;
  double field_rtol = 5e-2;
};

/// One output row: a single (params, route) evaluation. Rows for a
/// forbidden gamma carry status "error" and no values.
struct SweepRow {
  int n = 0;
  double gamma = 0.0;
  Route route = Route::ClosedForm;
  std::optional<double> c_value;
  std::optional<double> target;     // closed-form C
  std::optional<double> deviation;  // |c_value - target| / target
  std::string branch;
  std::string grid;
  std::string status;  // "pass" | "fail" | "error"
};

/// Evaluates the requested routes for every parameter pair. A failing or
/// forbidden row never aborts the sweep; ordering is deterministic
/// (parameters in input order, routes in enum order).
std::vector<SweepRow> sweep_report(const std::vector<std::pair<int, double>>& p_list,
                                   const RouteSet& routes,
                                   const SweepOptions& opts = {});

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

}  // namespace hardyleray

#endif  // HARDYLERAY_SWEEP_HPP
