#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace asb::cli {

// Exit codes shared by every subcommand:
//   0 success, 1 validation failure, 2 I/O failure, 3 runtime termination
//   (nav timeout, battery, sensor fault, would-sink, over-current).
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitRuntime = 3;

// Run the full command line (without argv[0]); results go to out,
// diagnostics to err. This is main() minus the process boundary, so tests
// can drive the real thing.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace asb::cli
