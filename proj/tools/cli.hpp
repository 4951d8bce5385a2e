#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skqaoa::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kBadInput = 2,
  kResidue = 3,
  kNotConverged = 4,
  kMemoryCap = 5,
  kEigenNotConverged = 6,
  kNonFinite = 7,
};

/// Runs one invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a 64-bit hash, printed as 16 hex digits.
std::string fnv1a64_hex(const std::string& data);

}  // namespace skqaoa::cli
