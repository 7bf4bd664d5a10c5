// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "hardyleray/constants.hpp"
#include "hardyleray/minimizing.hpp"
#include "hardyleray/numerics.hpp"
#include "hardyleray/operators.hpp"
#include "hardyleray/report.hpp"
#include "hardyleray/spectral.hpp"
#include "hardyleray/stream2d.hpp"
#include "hardyleray/sweep.hpp"

namespace hardyleray::cli {

namespace {

// Writes `text` to cfg.out_file when set, else to `out`.
int emit(const RunConfig& cfg, std::ostream& out, std::ostream& err,
         const std::string& text, int code) {
  if (cfg.out_file.empty()) {
    out << text;
    return code;
  }
  std::ofstream f(cfg.out_file, std::ios::binary);
  if (!f) {
    err << "error: cannot open '" << cfg.out_file << "' for writing\n";
    return kExitUsage;
  }
  f << text;
  return code;
}

std::vector<double> gamma_values(const RunConfig& cfg) {
  std::vector<double> out;
  out.reserve(cfg.gamma.count);
  for (int i = 0; i < cfg.gamma.count; ++i) out.push_back(cfg.gamma.at(i));
  return out;
}

void warn_near_forbidden(const Params& p, std::ostream& err) {
  if (p.near_forbidden()) {
    err << "warning: gamma = " << fmt17(p.gamma)
        << " is within 1e-9 of the excluded value " << fmt17(forbidden_gamma(p.n))
        << "; the constant is near-singular\n";
  }
}

struct ConstantRow {
  Params p;
  ConstantBreakdown b;
  double classical;
  double ratio;
};

std::string constant_json(const std::vector<ConstantRow>& rows) {
  std::ostringstream os;
  auto one = [&](const ConstantRow& r) {
    os << "{\"n\": " << r.p.n << ", \"gamma\": " << fmt17(r.p.gamma)
       << ", \"C\": " << fmt17(r.b.c) << ", \"C_inverse\": " << fmt17(r.b.c_inverse)
       << ", \"radial_term\": " << fmt17(r.b.radial_term)
       << ", \"angular_infimum\": " << fmt17(r.b.angular_infimum)
       << ", \"branch\": \"" << branch_name(r.b.branch) << "\""
       << ", \"classical\": " << fmt17(r.classical)
       << ", \"improvement_ratio\": " << fmt17(r.ratio) << "}";
  };
  if (rows.size() == 1) {
    one(rows[0]);
    os << "\n";
  } else {
    os << "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      os << "  ";
      one(rows[i]);
      os << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "]\n";
  }
  return os.str();
}

std::string constant_csv(const std::vector<ConstantRow>& rows) {
  std::ostringstream os;
  os << "n,gamma,C,C_inverse,radial_term,angular_infimum,branch,classical,"
        "improvement_ratio\n";
  for (const auto& r : rows) {
    os << r.p.n << ',' << fmt17(r.p.gamma) << ',' << fmt17(r.b.c) << ','
       << fmt17(r.b.c_inverse) << ',' << fmt17(r.b.radial_term) << ','
       << fmt17(r.b.angular_infimum) << ',' << branch_name(r.b.branch) << ','
       << fmt17(r.classical) << ',' << fmt17(r.ratio) << '\n';
  }
  return os.str();
}

std::string constant_table(const std::vector<ConstantRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "n = %d, gamma = %.12g\n"
                  "  C                = %.12g\n"
                  "  1/C              = %.12g  (radial %.12g + angular %.12g)\n"
                  "  branch           = %s\n"
                  "  classical C      = %.12g\n"
                  "  improvement      = %.12g\n",
                  r.p.n, r.p.gamma, r.b.c, r.b.c_inverse, r.b.radial_term,
                  r.b.angular_infimum, branch_name(r.b.branch), r.classical,
                  r.ratio);
    os << buf;
  }
  return os.str();
}

MinimizingKind pick_minimizing_kind(const Params& p) {
  if (p.n == 2) {
    return sharp_constant(p).branch == Branch::TwoD_NuOne
               ? MinimizingKind::PlanarNuOne
               : MinimizingKind::PlanarNuZero;
  }
  return poloidal_infimum(p) <= azimuthal_infimum(p) ? MinimizingKind::Poloidal
                                                     : MinimizingKind::Azimuthal;
}

}  // namespace

int cmd_constant(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<ConstantRow> rows;
  for (double g : gamma_values(cfg)) {
    const Params p(cfg.n, g);  // throws on the excluded value
    warn_near_forbidden(p, err);
    rows.push_back({p, sharp_constant(p), classical_constant(p),
                    improvement_ratio(p)});
  }
  std::string text;
  switch (cfg.effective_format()) {
    case OutputFormat::Json: text = constant_json(rows); break;
    case OutputFormat::Csv: text = constant_csv(rows); break;
    case OutputFormat::Table: text = constant_table(rows); break;
  }
  return emit(cfg, out, err, text, kExitPass);
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  struct Row {
    double gamma, closed, oracle, deviation, lambda;
    int nu;
    std::string branch;
    bool pass;
  };
  std::vector<Row> rows;
  bool all_pass = true;
  for (double g : gamma_values(cfg)) {
    const Params p(cfg.n, g);
    warn_near_forbidden(p, err);
    const double closed = total_infimum(p);
    const auto brute = brute_force_infimum(p, cfg.lambda_max, cfg.nu_max,
                                           cfg.lambda_points);
    const double dev = rel_diff(closed, brute.value);
    std::string branch;
    if (p.n == 2) {
      branch = "nu" + std::to_string(brute.nu);
    } else {
      branch = brute.azimuthal ? "azimuthal" : "poloidal";
    }
    const bool pass = dev <= cfg.rtol_oracle;
    all_pass = all_pass && pass;
    rows.push_back({g, closed, brute.value, dev, brute.lambda, brute.nu,
                    branch, pass});
  }

  std::ostringstream os;
  const OutputFormat fmt = cfg.effective_format();
  if (fmt == OutputFormat::Json) {
    os << "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      os << "  {\"n\": " << cfg.n << ", \"gamma\": " << fmt17(r.gamma)
         << ", \"closed_infimum\": " << fmt17(r.closed)
         << ", \"oracle_infimum\": " << fmt17(r.oracle)
         << ", \"deviation\": " << fmt17(r.deviation)
         << ", \"lambda_at\": " << fmt17(r.lambda) << ", \"nu_at\": " << r.nu
         << ", \"branch\": \"" << r.branch << "\", \"pass\": "
         << (r.pass ? "true" : "false") << "}"
         << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "]\n";
  } else if (fmt == OutputFormat::Csv) {
    os << "n,gamma,closed_infimum,oracle_infimum,deviation,lambda_at,nu_at,"
          "branch,pass\n";
    for (const auto& r : rows) {
      os << cfg.n << ',' << fmt17(r.gamma) << ',' << fmt17(r.closed) << ','
         << fmt17(r.oracle) << ',' << fmt17(r.deviation) << ','
         << fmt17(r.lambda) << ',' << r.nu << ',' << r.branch << ','
         << (r.pass ? "pass" : "fail") << '\n';
    }
  } else {
    for (const auto& r : rows) {
      char buf[320];
      std::snprintf(buf, sizeof buf,
                    "n = %d, gamma = %.12g: infimum %.12g (closed) vs %.12g "
                    "(grid), deviation %.3g, at (lambda = %g, nu = %d, %s) "
                    "[%s]\n",
                    cfg.n, r.gamma, r.closed, r.oracle, r.deviation, r.lambda,
                    r.nu, r.branch.c_str(), r.pass ? "pass" : "FAIL");
      os << buf;
    }
  }
  return emit(cfg, out, err, os.str(),
              all_pass ? kExitPass : kExitNumericalFail);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.nt <= 0 || cfg.n_theta <= 0 || cfg.n_phi <= 0) {
    throw std::invalid_argument("verify: grid sizes must be positive");
  }
  const Params p(cfg.n, cfg.gamma.min);
  warn_near_forbidden(p, err);
  const MinimizingKind kind = pick_minimizing_kind(p);

  const double k_top = 4.0 * cfg.k;
  const double t_half =
      suggested_t_half(MinimizingSequenceSpec(kind, k_top, p));
  const double t_lo = cfg.t_min.value_or(-t_half);
  const double t_hi = cfg.t_max.value_or(t_half);

  struct Row {
    double k, value, target, gap, c_inv;
  };
  const double radial = p.radial_shift() * p.radial_shift();
  std::vector<Row> rows;
  for (double kk : {cfg.k, 2.0 * cfg.k, 4.0 * cfg.k}) {
    QuotientReport r;
    if (p.n == 2) {
      auto grid =
          std::make_shared<const PolarGrid2D>(t_lo, t_hi, cfg.nt, cfg.n_phi);
      r = rayleigh_quotient_2d(
          build_planar_minimizer(MinimizingSequenceSpec(kind, kk, p), grid));
    } else {
      auto grid = make_grid(t_lo, t_hi, cfg.nt, p.n, cfg.n_theta);
      r = rayleigh_quotient(
          build_axisym_minimizer(MinimizingSequenceSpec(kind, kk, p), grid));
    }
    rows.push_back({kk, r.value, r.target, r.gap(), radial + r.value});
  }
  const double c_inv_target = radial + rows[0].target;

  bool pass = true;
  for (const auto& r : rows) pass = pass && r.value >= r.target * (1.0 - 1e-9);

  std::ostringstream os;
  const OutputFormat fmt = cfg.effective_format();
  if (fmt == OutputFormat::Json) {
    os << "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      os << "  {\"n\": " << cfg.n << ", \"gamma\": " << fmt17(p.gamma)
         << ", \"kind\": \"" << minimizing_kind_name(kind) << "\", \"k\": "
         << fmt17(r.k) << ", \"quotient\": " << fmt17(r.value)
         << ", \"target\": " << fmt17(r.target) << ", \"gap\": "
         << fmt17(r.gap) << ", \"C_inverse\": " << fmt17(r.c_inv)
         << ", \"C_inverse_target\": " << fmt17(c_inv_target)
         << ", \"gap_ratio\": "
         << (i == 0 ? std::string("null") : fmt17(rows[i - 1].gap / r.gap))
         << "}" << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "]\n";
  } else if (fmt == OutputFormat::Csv) {
    os << "n,gamma,kind,k,quotient,target,gap,C_inverse,C_inverse_target,"
          "gap_ratio\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      os << cfg.n << ',' << fmt17(p.gamma) << ',' << minimizing_kind_name(kind)
         << ',' << fmt17(r.k) << ',' << fmt17(r.value) << ','
         << fmt17(r.target) << ',' << fmt17(r.gap) << ',' << fmt17(r.c_inv)
         << ',' << fmt17(c_inv_target) << ','
         << (i == 0 ? std::string() : fmt17(rows[i - 1].gap / r.gap)) << '\n';
    }
  } else {
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "%s sequence, n = %d, gamma = %.12g, reduced target %.12g "
                  "(1/C = %.12g)\n",
                  minimizing_kind_name(kind), cfg.n, p.gamma, rows[0].target,
                  c_inv_target);
    os << buf;
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      if (i == 0) {
        std::snprintf(buf, sizeof buf, "  k = %6g: quotient %.12g, gap %.3e\n",
                      r.k, r.value, r.gap);
      } else {
        std::snprintf(buf, sizeof buf,
                      "  k = %6g: quotient %.12g, gap %.3e (ratio %.2f)\n",
                      r.k, r.value, r.gap, rows[i - 1].gap / r.gap);
      }
      os << buf;
    }
  }
  return emit(cfg, out, err, os.str(), pass ? kExitPass : kExitNumericalFail);
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<int, double>> p_list;
  for (double g : gamma_values(cfg)) p_list.emplace_back(cfg.n, g);

  SweepOptions opts;
  opts.lambda_max = cfg.lambda_max;
  opts.lambda_points = cfg.lambda_points;
  opts.nu_max = cfg.nu_max;
  opts.oracle_rtol = cfg.rtol_oracle;
  opts.k = cfg.k;
  opts.nt = std::min(cfg.nt, 1024);
  opts.n_theta = std::min(cfg.n_theta, 128);
  opts.n_phi = cfg.n_phi;
  opts.field_rtol = cfg.rtol_field;

  const auto rows = sweep_report(p_list, cfg.routes, opts);

  int errors = 0, fails = 0;
  for (const auto& r : rows) {
    if (r.status == "error") ++errors;
    if (r.status == "fail") ++fails;
  }

  std::string text;
  const OutputFormat fmt = cfg.effective_format();
  if (fmt == OutputFormat::Json) {
    text = sweep_json(rows);
  } else if (fmt == OutputFormat::Csv) {
    text = sweep_csv(rows);
  } else {
    std::ostringstream os;
    for (const auto& r : rows) {
      char buf[320];
      if (r.status == "error") {
        std::snprintf(buf, sizeof buf, "n = %d, gamma = %.12g, %-14s [error]\n",
                      r.n, r.gamma, route_name(r.route));
      } else {
        std::snprintf(buf, sizeof buf,
                      "n = %d, gamma = %.12g, %-14s C = %.12g, deviation "
                      "%.3g, %s [%s]\n",
                      r.n, r.gamma, route_name(r.route), *r.c_value,
                      *r.deviation, r.branch.c_str(), r.status.c_str());
      }
      os << buf;
    }
    text = os.str();
  }

  int code = kExitPass;
  if (errors == static_cast<int>(rows.size())) code = kExitUsage;
  else if (fails > 0) code = kExitNumericalFail;
  const int emitted = emit(cfg, out, err, text, code);
  if (errors > 0 && emitted != kExitUsage) {
    err << "note: " << errors << " row(s) carry an error marker\n";
  }
  return emitted;
}

int cmd_random_test(const RunConfig& cfg, std::ostream& out,
                    std::ostream& err) {
  if (cfg.trials < 1) {
    throw std::invalid_argument("random-test: need --trials >= 1");
  }
  const Params p(cfg.n, cfg.gamma.min);
  warn_near_forbidden(p, err);
  const double eps = cfg.never_violated_eps;

  double min_quotient = std::numeric_limits<double>::infinity();
  int min_at = -1;
  double target = 0.0;
  double max_route_dev = 0.0;

  if (p.n == 2) {
    target = sharp_constant(p).c_inverse;
    StreamFieldOptions opts{cfg.stream_nx, cfg.stream_half};
    for (int trial = 0; trial < cfg.trials; ++trial) {
      const auto f =
          random_divfree_2d(cfg.seed + trial, cfg.bumps, p, opts);
      const auto vec = check_inequality_2d(f);
      const auto str = check_stream_form(f);
      max_route_dev = std::max(max_route_dev, rel_diff(vec.value, str.value));
      if (vec.value < min_quotient) {
        min_quotient = vec.value;
        min_at = trial;
      }
    }
  } else {
    target = total_infimum(p);
    const double th = suggested_t_half_divfree(p);
    const double t_lo = cfg.t_min.value_or(-th);
    const double t_hi = cfg.t_max.value_or(th);
    auto grid = make_grid(t_lo, t_hi, std::min(cfg.nt, 1024), p.n,
                          std::min(cfg.n_theta, 256));
    for (int trial = 0; trial < cfg.trials; ++trial) {
      const auto v = random_divfree_axisym(cfg.seed + trial, p, grid);
      const auto r = rayleigh_quotient(v);
      if (r.value < min_quotient) {
        min_quotient = r.value;
        min_at = trial;
      }
    }
  }

  const bool pass =
      min_quotient >= target * (1.0 - eps) && max_route_dev <= 1e-6;

  std::ostringstream os;
  const OutputFormat fmt = cfg.effective_format();
  if (fmt == OutputFormat::Json) {
    os << "{\"n\": " << cfg.n << ", \"gamma\": " << fmt17(p.gamma)
       << ", \"trials\": " << cfg.trials << ", \"seed\": " << cfg.seed
       << ", \"min_quotient\": " << fmt17(min_quotient)
       << ", \"min_trial\": " << min_at << ", \"target\": " << fmt17(target)
       << ", \"slack\": " << fmt17(eps) << ", \"max_route_deviation\": "
       << fmt17(max_route_dev) << ", \"pass\": " << (pass ? "true" : "false")
       << "}\n";
  } else if (fmt == OutputFormat::Csv) {
    os << "n,gamma,trials,seed,min_quotient,min_trial,target,slack,"
          "max_route_deviation,pass\n"
       << cfg.n << ',' << fmt17(p.gamma) << ',' << cfg.trials << ','
       << cfg.seed << ',' << fmt17(min_quotient) << ',' << min_at << ','
       << fmt17(target) << ',' << fmt17(eps) << ',' << fmt17(max_route_dev)
       << ',' << (pass ? "pass" : "fail") << '\n';
  } else {
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "n = %d, gamma = %.12g: %d trials (seed %llu)\n"
                  "  min quotient %.12g at trial %d, floor %.12g "
                  "(target %.12g, slack %.2g)\n",
                  cfg.n, p.gamma, cfg.trials,
                  static_cast<unsigned long long>(cfg.seed), min_quotient,
                  min_at, target * (1.0 - eps), target, eps);
    os << buf;
    if (cfg.n == 2) {
      std::snprintf(buf, sizeof buf, "  max route deviation %.3g\n",
                    max_route_dev);
      os << buf;
    }
    os << (pass ? "PASS\n" : "FAIL\n");
  }
  return emit(cfg, out, err, os.str(), pass ? kExitPass : kExitNumericalFail);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::Constant: return cmd_constant(cfg, out, err);
    case Command::Reduce: return cmd_reduce(cfg, out, err);
    case Command::Verify: return cmd_verify(cfg, out, err);
    case Command::Sweep: return cmd_sweep(cfg, out, err);
    case Command::RandomTest: return cmd_random_test(cfg, out, err);
  }
  return kExitUsage;
}

}  // namespace hardyleray::cli
