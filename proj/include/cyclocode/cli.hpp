#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cyclocode {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitParameter = 2, kExitResource = 3, kExitMismatch = 4 };

/// Runs one command line (args excludes the program name). Reports go to
/// `out` (or the --out file), diagnostics and mismatch details to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckTally {
  std::string name;
  std::uint64_t points = 0;
  std::uint64_t passed = 0;
  std::vector<std::string> failures;  // one line per failing point
};

/// Every oracle cross-check over all supported q and m with q^m <= max_n.
std::vector<CheckTally> run_oracle_suite(std::uint64_t max_n, std::uint64_t seed);

}  // namespace cyclocode
