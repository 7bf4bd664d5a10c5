// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_TOOLS_RUN_CONFIG_HPP
#define HARDYLERAY_TOOLS_RUN_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "hardyleray/sweep.hpp"

namespace hardyleray::cli {

enum class Command { Constant, Reduce, Verify, Sweep, RandomTest };
enum class OutputFormat { Table, Csv, Json };

const char* command_name(Command c);
const char* output_format_name(OutputFormat f);

/// Inclusive gamma range min:max:count; a single value is min = max,
/// count = 1.
struct GammaRange {
  double min = 0.0;
  double max = 0.0;
  int count = 1;

  friend bool operator==(const GammaRange&, const GammaRange&) = default;
  double at(int i) const;
};

GammaRange parse_gamma_range(const std::string& text);

/// Everything a command run depends on; serializes losslessly so a parsed
/// config round-trips bit-identically.
struct RunConfig {
  Command command = Command::Constant;
  int n = 3;
  GammaRange gamma;

  // grid overrides
  int nt = 2048;
  int n_theta = 256;
  int n_phi = 64;
  std::optional<double> t_min;  // default: sized from k
  std::optional<double> t_max;
  double k = 16.0;
  std::uint64_t seed = 42;
  int trials = 100;
  int bumps = 6;
  int stream_nx = 256;
  double stream_half = 1.0;

  // oracle grid
  double lambda_max = 10.0;
  int lambda_points = 2001;
  int nu_max = 64;

  // tolerances
  double rtol_oracle = 1e-6;
  double rtol_field = 5e-2;
  double never_violated_eps = 2e-2;

  OutputFormat output = OutputFormat::Table;
  bool output_explicit = false;
  std::string out_file;
  RouteSet routes = RouteSet::all();

  friend bool operator==(const RunConfig&, const RunConfig&) = default;

  std::string to_json() const;
  static RunConfig from_json(const std::string& text);

  /// Format resolution: explicit --output wins, otherwise the out-file
  /// extension, otherwise a table.
  OutputFormat effective_format() const;
};

/// Parses argv into a RunConfig. Throws std::invalid_argument with a usage
/// message on bad input.
RunConfig parse_args(int argc, const char* const* argv);

}  // namespace hardyleray::cli

#endif  // HARDYLERAY_TOOLS_RUN_CONFIG_HPP
