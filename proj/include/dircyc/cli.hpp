#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace dircyc {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int parse = 2;
inline constexpr int numerical = 3;
inline constexpr int inconclusive = 4;
}  // namespace exit_code

/// Runs one subcommand (norm, opa, scan, zeros, classify, recurrence, qsmooth).
/// `args` excludes the program name. Results go to `out` unless --out names a
/// file; diagnostics go to `err`.
int runCli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dircyc
