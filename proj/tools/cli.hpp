#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tokslide::cli {

// Exit codes: 0 = YES / success, 1 = NO, 2 = usage or input error.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kError = 2;

// Environment variable overriding the oracle state cap.
inline constexpr const char* kOracleCapEnv = "TOKSLIDE_ORACLE_CAP";

/// Runs one command. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tokslide::cli
