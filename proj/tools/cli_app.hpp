#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace intervar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDiscrepancy = 2;

/// Runs one subcommand (window, distance, variety, classify, progression,
/// verify) against the given streams. Returns kExitOk on success, kExitUsage
/// on bad input or arguments, kExitDiscrepancy when `verify` found a
/// violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace intervar::cli
