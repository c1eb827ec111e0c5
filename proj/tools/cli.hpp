#ifndef NOISYCLIMB_TOOLS_CLI_HPP_
#define NOISYCLIMB_TOOLS_CLI_HPP_

#include <iosfwd>

namespace noisyclimb::cli {

inline constexpr int kExitSolved = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnsolved = 2;

// Entry point shared by the executable and the tests. CSV tables go to
// `out`; diagnostics and usage errors go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace noisyclimb::cli

#endif  // NOISYCLIMB_TOOLS_CLI_HPP_
