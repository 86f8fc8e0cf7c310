#pragma once

#include <ostream>

namespace lattisym::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kDegenerate = 3,
  kInvalidGenerator = 4,
  kVerificationFailed = 5,
};

/// Entry point of the `lattisym` command; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lattisym::cli
