#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace robustham::cli {

// Exit codes.
inline constexpr int kOk = 0;           // success, certified, found
inline constexpr int kNegative = 1;     // refuted, infeasible, none
inline constexpr int kInconclusive = 2; // budget exhausted, not applicable, no violation found
inline constexpr int kUsage = 64;       // bad flags or violated preconditions
inline constexpr int kDataError = 65;   // malformed graph input

// args excludes the program name. Graphs are read from `in` unless
// --input is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace robustham::cli
