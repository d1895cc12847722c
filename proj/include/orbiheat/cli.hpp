#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbiheat::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;       ///< parse or validation failure
inline constexpr int kGaussBonnet = 2;        ///< metric contradicts Gauss-Bonnet
inline constexpr int kGoldenMismatch = 3;     ///< `tables` found a differing entry

/// Payload goes to out, diagnostics to err.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbiheat::cli
