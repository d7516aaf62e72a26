#pragma once

#include <iosfwd>

#include "pancake_cli/config.hpp"

namespace pancake::cli {

// Runs the selected subcommand; returns the process exit code.
int execute(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace pancake::cli
