// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "run_config.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "hardyleray/report.hpp"

namespace hardyleray::cli {

using nlohmann::json;

const char* command_name(Command c) {
  switch (c) {
    case Command::Constant: return "constant";
    case Command::Reduce: return "reduce";
    case Command::Verify: return "verify";
    case Command::Sweep: return "sweep";
    case Command::RandomTest: return "random-test";
  }
  return "?";
}

const char* output_format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Table: return "table";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
  }
  return "?";
}

double GammaRange::at(int i) const {
  if (count <= 1) return min;
  return min + (max - min) * i / (count - 1);
}

GammaRange parse_gamma_range(const std::string& text) {
  GammaRange r;
  const auto c1 = text.find(':');
  try {
    if (c1 == std::string::npos) {
      r.min = r.max = std::stod(text);
      r.count = 1;
      return r;
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) {
      throw std::invalid_argument("expected min:max:count");
    }
    r.min = std::stod(text.substr(0, c1));
    r.max = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    r.count = std::stoi(text.substr(c2 + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad gamma value/range '" + text +
                                "' (expected g or min:max:count)");
  }
  if (r.count < 1 || (r.count > 1 && !(r.max >= r.min))) {
    throw std::invalid_argument("bad gamma range '" + text + "'");
  }
  return r;
}

namespace {

Command command_from_name(const std::string& s) {
  for (Command c : {Command::Constant, Command::Reduce, Command::Verify,
                    Command::Sweep, Command::RandomTest}) {
    if (s == command_name(c)) return c;
  }
  throw std::invalid_argument("unknown command '" + s + "'");
}

OutputFormat format_from_name(const std::string& s) {
  for (OutputFormat f :
       {OutputFormat::Table, OutputFormat::Csv, OutputFormat::Json}) {
    if (s == output_format_name(f)) return f;
  }
  throw std::invalid_argument("unknown output format '" + s + "'");
}

RouteSet routes_from_text(const std::string& text) {
  if (text == "all") return RouteSet::all();
  RouteSet r;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "closed") r.closed_form = true;
    else if (item == "oracle") r.spectral_oracle = true;
    else if (item == "field") r.field_quotient = true;
    else throw std::invalid_argument("unknown route '" + item + "'");
  }
  if (r.empty()) throw std::invalid_argument("empty route set");
  return r;
}

std::string routes_to_text(const RouteSet& r) {
  if (r.closed_form && r.spectral_oracle && r.field_quotient) return "all";
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(r.closed_form, "closed");
  add(r.spectral_oracle, "oracle");
  add(r.field_quotient, "field");
  return out;
}

}  // namespace

std::string RunConfig::to_json() const {
  json j;
  j["command"] = command_name(command);
  j["n"] = n;
  j["gamma"] = {{"min", gamma.min}, {"max", gamma.max}, {"count", gamma.count}};
  j["nt"] = nt;
  j["n_theta"] = n_theta;
  j["n_phi"] = n_phi;
  if (t_min) j["t_min"] = *t_min;
  if (t_max) j["t_max"] = *t_max;
  j["k"] = k;
  j["seed"] = seed;
  j["trials"] = trials;
  j["bumps"] = bumps;
  j["stream_nx"] = stream_nx;
  j["stream_half"] = stream_half;
  j["lambda_max"] = lambda_max;
  j["lambda_points"] = lambda_points;
  j["nu_max"] = nu_max;
  j["rtol_oracle"] = rtol_oracle;
  j["rtol_field"] = rtol_field;
  j["never_violated_eps"] = never_violated_eps;
  j["output"] = output_format_name(output);
  j["output_explicit"] = output_explicit;
  j["out_file"] = out_file;
  j["routes"] = routes_to_text(routes);
  return j.dump(2);
}

RunConfig RunConfig::from_json(const std::string& text) {
  const json j = json::parse(text);
  RunConfig c;
  c.command = command_from_name(j.at("command").get<std::string>());
  c.n = j.at("n").get<int>();
  c.gamma.min = j.at("gamma").at("min").get<double>();
  c.gamma.max = j.at("gamma").at("max").get<double>();
  c.gamma.count = j.at("gamma").at("count").get<int>();
  c.nt = j.at("nt").get<int>();
  c.n_theta = j.at("n_theta").get<int>();
  c.n_phi = j.at("n_phi").get<int>();
  if (j.contains("t_min")) c.t_min = j.at("t_min").get<double>();
  if (j.contains("t_max")) c.t_max = j.at("t_max").get<double>();
  c.k = j.at("k").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.trials = j.at("trials").get<int>();
  c.bumps = j.at("bumps").get<int>();
  c.stream_nx = j.at("stream_nx").get<int>();
  c.stream_half = j.at("stream_half").get<double>();
  c.lambda_max = j.at("lambda_max").get<double>();
  c.lambda_points = j.at("lambda_points").get<int>();
  c.nu_max = j.at("nu_max").get<int>();
  c.rtol_oracle = j.at("rtol_oracle").get<double>();
  c.rtol_field = j.at("rtol_field").get<double>();
  c.never_violated_eps = j.at("never_violated_eps").get<double>();
  c.output = format_from_name(j.at("output").get<std::string>());
  c.output_explicit = j.at("output_explicit").get<bool>();
  c.out_file = j.at("out_file").get<std::string>();
  c.routes = routes_from_text(j.at("routes").get<std::string>());
  return c;
}

OutputFormat RunConfig::effective_format() const {
  if (output_explicit || out_file.empty()) return output;
  if (out_file.size() >= 4 && out_file.rfind(".csv") == out_file.size() - 4) {
    return OutputFormat::Csv;
  }
  if (out_file.size() >= 5 && out_file.rfind(".json") == out_file.size() - 5) {
    return OutputFormat::Json;
  }
  return output;
}

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"sharp divergence-free Hardy-Leray constants"};
  app.require_subcommand(1);

  std::string gamma_text = "0";
  std::string output_text;
  std::string routes_text = "all";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-n,--dimension", cfg.n, "space dimension (>= 2)");
    sub->add_option("-g,--gamma", gamma_text,
                    "weight exponent, a value or min:max:count");
    sub->add_option("--output", output_text, "table|csv|json");
    sub->add_option("-o,--out-file", cfg.out_file,
                    "write to a file (format inferred from the extension)");
    sub->add_option("--nt", cfg.nt, "log-radial samples (power of two)");
    sub->add_option("--ntheta", cfg.n_theta, "polar-angle nodes");
    sub->add_option("--nphi", cfg.n_phi, "planar angle samples");
    sub->add_option("--tmin", [&cfg](const CLI::results_t& res) {
      cfg.t_min = std::stod(res[0]);
      return true;
    }, "lower log-radius bound");
    sub->add_option("--tmax", [&cfg](const CLI::results_t& res) {
      cfg.t_max = std::stod(res[0]);
      return true;
    }, "upper log-radius bound");
    sub->add_option("-k,--concentration", cfg.k, "profile width parameter");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--trials", cfg.trials, "random trials");
    sub->add_option("--bumps", cfg.bumps, "bumps per random stream function");
    sub->add_option("--stream-nx", cfg.stream_nx, "Cartesian grid size");
    sub->add_option("--stream-half", cfg.stream_half, "Cartesian half extent");
    sub->add_option("--lambda-max", cfg.lambda_max, "oracle frequency cap");
    sub->add_option("--lambda-points", cfg.lambda_points,
                    "oracle frequency samples");
    sub->add_option("--nu-max", cfg.nu_max, "oracle angular mode cap");
    sub->add_option("--rtol-oracle", cfg.rtol_oracle,
                    "closed form vs oracle tolerance");
    sub->add_option("--rtol-field", cfg.rtol_field,
                    "closed form vs field tolerance");
    sub->add_option("--eps", cfg.never_violated_eps,
                    "discretization slack for quotient floors");
    sub->add_option("--routes", routes_text, "all or closed,oracle,field");
  };

  for (Command c : {Command::Constant, Command::Reduce, Command::Verify,
                    Command::Sweep, Command::RandomTest}) {
    add_common(app.add_subcommand(command_name(c)));
  }

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }

  cfg.command = command_from_name(app.get_subcommands().at(0)->get_name());
  cfg.gamma = parse_gamma_range(gamma_text);
  cfg.routes = routes_from_text(routes_text);
  if (!output_text.empty()) {
    cfg.output = format_from_name(output_text);
    cfg.output_explicit = true;
  }
  return cfg;
}

}  // namespace hardyleray::cli
