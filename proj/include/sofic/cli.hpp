#pragma once

#include <iosfwd>

namespace sofic::cli {

/// Exit codes.
inline constexpr int ok = 0;
inline constexpr int violation = 1;
inline constexpr int input_error = 2;
inline constexpr int resource_cap = 3;

/// Runs one command line. Output is deterministic for fixed inputs.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sofic::cli
