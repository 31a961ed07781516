#pragma once

#include <ostream>

namespace mpvton {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

/// Entry point of the `mpvton` tool. Subcommands: synth-data, train, tryon,
/// eval, grid. Errors go to `err` as `error: ...` lines.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mpvton
