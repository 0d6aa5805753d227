#pragma once

#include <iosfwd>

namespace cqed::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumeric = 2;

// Entry point of the command-line tool. Data goes to `out`, diagnostics and
// usage text to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cqed::cli
