#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace logres::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kInvalidFoliation = 3,
  kUncertified = 4,
};

inline constexpr std::string_view kSingSchemaId = "logres.sing-report/1";

// Runs the command line `args` (without the program name). `tolerance_profile` is the
// value of LOGRES_TOLERANCE_PROFILE, empty when unset.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::string_view tolerance_profile = {});

}  // namespace logres::cli
