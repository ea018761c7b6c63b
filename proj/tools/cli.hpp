// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bt1::cli {

/// Runs the bt1 command line; returns the process exit status
/// (0 ok, 2 parse, 3 constraint, 4 size guard, 5 internal).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bt1::cli
