#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sweepcover::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kOracleMismatch = 1;
inline constexpr int kParseFailure = 2;
inline constexpr int kBadParameters = 3;

// Runs one command line (without the program name). Results go to `out`
// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sweepcover::cli
