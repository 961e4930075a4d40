// Copyright 2026 The auxq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "auxq/cli/report.hpp"
#include "auxq/core/types.hpp"

namespace auxq::cli {

/// Bad command-line values; the front end maps this to a usage error.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CommandResult {
  ReportDocument report;
  /// Same content as a table, for --format csv.
  std::string csv;
  int exit_code = 0;
  /// Print `report.results` alone (netlists stay loadable as-is).
  bool bare = false;
};

/// "3" or "1..6"; both ends must lie in [lo, hi].
std::pair<int, int> parse_n_range(const std::string& text, int lo, int hi);

/// A logical input: digit string (most significant first) or random:N.
struct InputSpec {
  std::vector<std::string> labels;
  std::vector<CVector> states;
  bool random = false;
};

/// `gate` is "pswap" (carrier digit 0..2, target 0..1) or "fredkin3" (three bits).
InputSpec parse_input(const std::string& gate, const std::string& text, std::uint64_t seed);

CommandResult cmd_verify(int n_min, int n_max);
CommandResult cmd_optics(const std::string& gate, bool feedforward, const std::string& input,
                         std::uint64_t seed);
CommandResult cmd_table1();
CommandResult cmd_resources(int n_min, int n_max);
CommandResult cmd_certify();
/// Netlist JSON for a built-in gate; throws UsageError for unknown names.
CommandResult cmd_emit_netlist(const std::string& gate);

}  // namespace auxq::cli
