#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psisum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Claim ids accepted by `verify`, in the order `verify all` runs them.
const std::vector<std::string>& claim_ids();

}  // namespace psisum::cli
