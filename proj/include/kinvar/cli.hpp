/// @file cli.hpp
/// @brief Command-line entry point (subcommand dispatch).

#pragma once

namespace kinvar {

/// Runs the full CLI. Exit code 0: all checks passed; 1: some check failed;
/// 2: usage error.
int run_cli(int argc, const char* const* argv);

}  // namespace kinvar
