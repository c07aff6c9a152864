#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace maxmin::cli {

/// Exit statuses shared by every subcommand.
enum ExitStatus : int {
  kOk = 0,
  kFalse = 1,       // verification or validation did not hold
  kInputError = 2,  // parse, shape or precondition failure
  kSizeCap = 3,     // oracle grid too large
};

struct Options {
  std::string command;
  std::string input = "-";
  std::optional<std::string> lambda;
  std::optional<std::string> partition;
  bool pure = false;
  bool background = false;
  bool all = false;
  std::uint64_t grid_cap = 1'000'000;
  std::uint64_t seed = 1;
  std::size_t samples = 25;
  std::optional<std::string> out;
  std::optional<std::string> description;
};

/// Runs one subcommand. Input "-" reads `in`; without --out the result goes
/// to `out`. Diagnostics go to `err`.
int run(const Options& opts, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace maxmin::cli
