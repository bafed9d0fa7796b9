#pragma once

#include <iostream>
#include <optional>
#include <string>

#include "mdlmon/rational.hpp"

namespace mdlmon::cli {

struct Options {
  std::string formula;  // formula text (callers resolve file indirection)
  bool timer = false;
  bool explain = false;
  bool check = false;
  std::optional<std::string> dump_ddd_path;
  std::optional<Rational> horizon;
};

inline constexpr int kExitFulfilled = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUndetermined = 2;
inline constexpr int kExitInputError = 3;

/// Reads one JSON trace event per line from `trace`, drives a monitor, and
/// writes one verdict event per line to `out`. Returns the exit code.
int run(const Options& opts, std::istream& trace, std::ostream& out, std::ostream& err);

}  // namespace mdlmon::cli
