#pragma once

#include <ostream>

namespace catkit {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the catkit command line. Reports go to `out`, diagnostics
/// and usage text to `err`. Returns 0 on success, 1 when a check fails, 2 on
/// usage, parse or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catkit
