// Copyright 2026 The ghzstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHZSTAB_CLI_COMMANDS_HPP
#define GHZSTAB_CLI_COMMANDS_HPP

// Subcommand bodies of the ghzstab tool. Each takes parsed JSON and returns the
// JSON document written to standard output.

#include <cstdint>
#include <exception>
#include <optional>

#include "ghzstab/cli/json_io.hpp"

namespace ghz::cli {

// Parties up to which solve/verify also run the dense 2^N x 2^N oracle.
inline constexpr int kOracleCrossCheckParties = 10;

struct CommandOptions {
  // Command-line values take precedence over the angle file's tol/mode.
  std::optional<double> tol;
  std::optional<AngleMode> mode;
  std::int64_t shots = 10000;
  std::uint64_t seed = 0;
  double threshold = 0.999;
  double a_fraction = 0.5;
  int trials = 50;
  std::size_t env_dim = 8;
};

json cmd_classify(const json& angle_file, const CommandOptions& opt);
json cmd_solve(const json& angle_file, const CommandOptions& opt);

// unitaries: {"unitaries": [U_1, ..., U_n]} with U = [[[re, im], [re, im]], [[re, im], [re, im]]]
// (row major). Without it the canonical GHZ state is targeted.
// Output: {"report": Report, "angles": base angle file, "pair": {"a": angle file, "b": angle file}}
// where "pair" lists the Bloch directions of the local factors of A and B.
json cmd_construct(int n, const std::optional<json>& unitaries, const CommandOptions& opt);

// state: {"amplitudes": [records]}, {"states": [[records], ...], "weights": [...]}
// (weights optional, default equal) or {"maximally_mixed": true}. Without it the
// unique solver state is used; other cases are then a validation error.
json cmd_certify(const json& angle_file, const std::optional<json>& state, const CommandOptions& opt);

json cmd_verify(const json& angle_file, const CommandOptions& opt);

// 0 success, 2 malformed input or validation error, 3 internal consistency error.
int exit_code_for(const std::exception& e);

}  // namespace ghz::cli

#endif  // GHZSTAB_CLI_COMMANDS_HPP
