// The easp command-line front end as a library, so tests can drive it
// in-process.

#pragma once

#include <iosfwd>

namespace easp::cli {

// Exit codes.
inline constexpr int kFound = 0;
inline constexpr int kNone = 10;
inline constexpr int kCounterexample = 1;
inline constexpr int kInputError = 2;
inline constexpr int kCapExceeded = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace easp::cli
