#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fano::cli {

/// Runs one command line (without the program name). Primary output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
/// Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// The built-in acceptance battery (criteria 1 to 10).
std::vector<CheckResult> run_selfcheck();

}  // namespace fano::cli
