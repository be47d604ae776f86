#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twobridge::cli {

enum ExitCode : int {
  kOk = 0,
  /// verify ran and at least one suite failed.
  kVerifyFailed = 1,
  kBadInput = 2,
  kInternal = 3,
};

/// Runs one command line (without the program name) and returns the exit
/// status. Verbs: word, seq, reduce, null, epi, scan, equiv, verify.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twobridge::cli
