#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace otprh::cli {

/// Exit statuses of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitAssertion = 2;

/// Runs one `otp-rh` invocation. argv[0] is the program name.
///
/// Subcommands: moments, otp, szego, rh-verify, decay-sweep, asymptotics.
/// Each writes its CSV tables and `<command>_summary.json` into --out.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace otprh::cli
