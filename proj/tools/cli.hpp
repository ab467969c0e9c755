#pragma once

#include <iosfwd>

namespace horn::cli {

enum ExitCode : int {
  kOk = 0,
  kDisputed = 1,
  kNumericDomain = 2,  // PoleError, DomainError, OverflowError
  kNonConvergence = 3,
  kUsage = 64,
};

// Full command line including argv[0]. Reads HORN_KERNEL_SEED from the
// environment for the default --seed.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace horn::cli
