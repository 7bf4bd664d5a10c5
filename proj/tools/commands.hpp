// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_TOOLS_COMMANDS_HPP
#define HARDYLERAY_TOOLS_COMMANDS_HPP

#include <iosfwd>

#include "run_config.hpp"

namespace hardyleray::cli {

// Exit codes: 0 all checks pass, 1 a numerical check failed,
// 2 usage or domain error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitNumericalFail = 1;
inline constexpr int kExitUsage = 2;

int cmd_constant(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_reduce(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_random_test(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace hardyleray::cli

#endif  // HARDYLERAY_TOOLS_COMMANDS_HPP
