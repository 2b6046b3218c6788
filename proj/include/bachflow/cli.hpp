#pragma once

#include <iosfwd>

#include "bachflow/config.hpp"

namespace bachflow {

/// Executes a parsed configuration. Returns the process exit code: 0 when
/// every requested check passed, 1 when a check failed.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full entry point: parse, open --output, run, map errors to exit codes
/// (2 for usage errors, 3 for domain errors).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bachflow
