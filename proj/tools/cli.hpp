#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace csp::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,     // bad flags, invalid input, I/O failure
  kCapacity = 3,  // exhaustive oracle over its node limit
  kNumeric = 4,   // LP solver numeric failure
};

struct SolveReport {
  std::string center;
  std::size_t objective = 0;
  std::size_t lp_bound = 0;
  bool certified = false;
  std::optional<double> millis;  // empty when timing is omitted
};

std::string to_json(const SolveReport& report);
std::string to_text(const SolveReport& report);

/// Runs the `gen`, `solve` and `bench` subcommands. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csp::cli
