// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <iostream>

#include "commands.hpp"
#include "run_config.hpp"

int main(int argc, char** argv) {
  using namespace hardyleray::cli;
  try {
    const RunConfig cfg = parse_args(argc, argv);
    return run(cfg, std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalFail;
  }
}
