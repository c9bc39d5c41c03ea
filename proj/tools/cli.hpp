#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nht::cli {

// Exit statuses of run().
inline constexpr int kOk = 0;
inline constexpr int kVerdictFalse = 1;
inline constexpr int kUsageError = 2;

// Runs one command line (args excludes the program name). Tournaments are
// read from `in` unless --in is given and written to `out`; diagnostics go
// to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nht::cli
