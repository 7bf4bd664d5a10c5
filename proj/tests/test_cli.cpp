// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "run_config.hpp"

using namespace hardyleray::cli;

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HARDYLERAY_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

RunConfig parse(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"hardyleray"};
  argv.insert(argv.end(), args.begin(), args.end());
  return parse_args(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("gamma range parsing") {
  const GammaRange single = parse_gamma_range("0.5");
  CHECK(single.min == 0.5);
  CHECK(single.count == 1);
  const GammaRange range = parse_gamma_range("-3:3:121");
  CHECK(range.min == -3.0);
  CHECK(range.max == 3.0);
  CHECK(range.count == 121);
  CHECK(range.at(0) == -3.0);
  CHECK(range.at(120) == 3.0);
  CHECK(range.at(50) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK_THROWS_AS(parse_gamma_range("1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gamma_range("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gamma_range("3:1:5"), std::invalid_argument);
}

TEST_CASE("config round-trips through serialization") {
  const RunConfig a = parse({"sweep", "-n", "4", "-g", "-2:2:17", "--routes",
                             "closed,oracle", "--seed", "99", "--nt", "512",
                             "-o", "out.csv", "--rtol-oracle", "1e-7"});
  CHECK(a.command == Command::Sweep);
  CHECK(a.n == 4);
  CHECK(a.gamma.count == 17);
  CHECK(a.routes.closed_form);
  CHECK(a.routes.spectral_oracle);
  CHECK_FALSE(a.routes.field_quotient);
  CHECK(a.effective_format() == OutputFormat::Csv);
  CHECK(RunConfig::from_json(a.to_json()) == a);

  const RunConfig b = parse({"constant", "-n", "2", "-g", "-1", "--output",
                             "json"});
  CHECK(b.command == Command::Constant);
  CHECK(b.output == OutputFormat::Json);
  CHECK(RunConfig::from_json(b.to_json()) == b);

  const RunConfig c = parse({"verify", "-n", "3", "-g", "0", "-k", "8",
                             "--tmin", "-80", "--tmax", "80"});
  CHECK(c.t_min.has_value());
  CHECK(*c.t_min == -80.0);
  CHECK(RunConfig::from_json(c.to_json()) == c);

  const RunConfig d = parse({"random-test", "-n", "2", "-g", "1", "--trials",
                             "64", "--seed", "7"});
  CHECK(RunConfig::from_json(d.to_json()) == d);
}

TEST_CASE("format inference from the out-file extension") {
  RunConfig cfg = parse({"sweep", "-n", "3", "-g", "0:1:3", "-o", "x.json"});
  CHECK(cfg.effective_format() == OutputFormat::Json);
  cfg = parse({"sweep", "-n", "3", "-g", "0:1:3", "-o", "x.txt"});
  CHECK(cfg.effective_format() == OutputFormat::Table);
  cfg = parse({"sweep", "-n", "3", "-g", "0:1:3", "-o", "x.csv", "--output",
               "table"});
  CHECK(cfg.effective_format() == OutputFormat::Table);
}

TEST_CASE("cli constant command") {
  const auto r = run_cli("constant -n 3 -g 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("2.72") != std::string::npos);
  CHECK(r.output.find("PoloidalGammaLE1") != std::string::npos);
  CHECK(r.output.find("0.68") != std::string::npos);

  const auto bad = run_cli("constant -n 3 -g -0.5");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("-0.5") != std::string::npos);
  CHECK(bad.output.find("1 - n/2") != std::string::npos);

  const auto js = run_cli("constant -n 2 -g -1 --output json");
  CHECK(js.exit_code == 0);
  CHECK(js.output.find("\"C\": 0.7142857142857143") != std::string::npos);
  CHECK(js.output.find("\"branch\": \"TwoD_NuOne\"") != std::string::npos);

  // inside the guard band of the excluded value: accepted, but flagged
  const auto near = run_cli("constant -n 3 -g -0.4999999999");
  CHECK(near.exit_code == 0);
  CHECK(near.output.find("warning") != std::string::npos);
}

TEST_CASE("cli reduce command") {
  const auto r = run_cli("reduce -n 4 -g 1.2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("pass") != std::string::npos);

  const auto at_min = run_cli("reduce -n 3 -g 0 --output json");
  CHECK(at_min.exit_code == 0);
  CHECK(at_min.output.find("\"lambda_at\": 0") != std::string::npos);
  CHECK(at_min.output.find("\"nu_at\": 1") != std::string::npos);

  const auto planar = run_cli("reduce -n 2 -g 0.5 --output json");
  CHECK(planar.exit_code == 0);
  CHECK(planar.output.find("\"branch\": \"nu1\"") != std::string::npos);
}

TEST_CASE("cli verify command") {
  const auto r = run_cli("verify -n 3 -g 0 -k 4 --nt 512 --ntheta 64");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("k =") != std::string::npos);
  CHECK(r.output.find("ratio") != std::string::npos);

  const auto bad = run_cli("verify -n 3 -g 0 --nt 0");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli random-test command") {
  const std::string args =
      "random-test -n 2 -g 1 --trials 20 --seed 7 --stream-nx 128";
  const auto r1 = run_cli(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output.find("PASS") != std::string::npos);
  const auto r2 = run_cli(args);
  CHECK(r1.output == r2.output);  // byte-identical reruns

  const auto bad = run_cli("random-test -n 2 -g 1 --trials 0");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli sweep command") {
  const std::string out = "/tmp/hardyleray_sweep_test.csv";
  const std::string args =
      "sweep -n 3 -g -3:3:13 --routes closed,oracle -o " + out;
  const auto r = run_cli(args);
  CHECK(r.exit_code == 0);
  const std::string first = slurp(out);
  std::istringstream is(first);
  std::string line;
  std::getline(is, line);
  CHECK(line ==
        "n,gamma,route,C_value,target,deviation,branch,grid_descriptor,pass");
  int rows = 0, errors = 0;
  while (std::getline(is, line)) {
    ++rows;
    if (line.find(",error") != std::string::npos) ++errors;
  }
  CHECK(rows == 26);
  CHECK(errors == 2);  // gamma = -0.5 is excluded at n = 3

  // determinism: identical bytes on a rerun
  run_cli(args);
  CHECK(slurp(out) == first);
  std::remove(out.c_str());

  // a sweep consisting solely of the excluded value fails as a usage error
  const auto all_bad = run_cli("sweep -n 2 -g 0:0:1 --routes closed");
  CHECK(all_bad.exit_code == 2);
}
