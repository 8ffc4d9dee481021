#pragma once

// Plan configuration: line-oriented `key = value` text.
//
//   order = 4
//   epsilons = -11/2, -9/2, -7/2, -5/2
//   parities = -1, +1, -1, +1      # optional
//   x_max = 10
//   grid_n = 4000
//   levels_to_report = 8
//   output_dir = out
//
// Lists are comma separated; numbers are decimals or fractions p/q; '#'
// starts a comment. Unknown or repeated keys are errors.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "susyq/seeds.hpp"

namespace susyq {

struct PlanConfig {
  int order = 0;
  std::vector<double> epsilons;
  std::optional<std::vector<Parity>> parities;
  double x_max = 10.0;
  int grid_n = 4000;
  int levels_to_report = 8;
  std::string output_dir = ".";
};

/// Throws config_error carrying the offending line number.
PlanConfig parse_config(std::string_view text);

/// Decimal or p/q.
double parse_number(std::string_view token);

}  // namespace susyq
