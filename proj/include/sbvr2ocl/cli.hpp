#pragma once

namespace sbvr2ocl {

// Full command-line entry point: parses arguments, dispatches the subcommand,
// and returns the process exit code (0 = success, 1 = content errors in the
// input files, 2 = usage errors such as bad flags or unreadable paths).
int run_cli(int argc, const char* const* argv);

} // namespace sbvr2ocl
