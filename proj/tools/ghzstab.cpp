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

// ghzstab: JSON front end for classification, solving, construction,
// certification and verification of GHZ stabilizing observable pairs.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ghzstab/cli/commands.hpp"
#include "ghzstab/errors.hpp"

namespace {

using ghz::cli::json;

json read_json(const std::string& path) {
  if (path.empty() || path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw ghz::DomainError("cannot open " + path);
  return json::parse(in);
}

std::optional<json> read_optional(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return read_json(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local spin observable pairs that stabilize GHZ states"};
  app.require_subcommand(1);

  ghz::cli::CommandOptions opt;
  std::string input, state_file, unitaries_file, mode;
  double tol = 0.0;
  bool pretty = false;
  int n = 0;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", input, "angle file (default: standard input)");
    sub->add_option("--tol", tol, "numerical tolerance (default 1e-9 or the file's tol)")->check(CLI::PositiveNumber);
    sub->add_option("--mode", mode, "angle arithmetic")->check(CLI::IsMember({"exact", "approx"}));
    sub->add_flag("--pretty", pretty, "indent the JSON output");
  };

  auto* classify = app.add_subcommand("classify", "case and M set");
  add_common(classify, true);
  auto* solve = app.add_subcommand("solve", "common +1 eigenspace with states and sector dimensions");
  add_common(solve, true);
  auto* construct = app.add_subcommand("construct", "observable pair stabilizing a given N-GHZ state");
  add_common(construct, false);
  construct->add_option("-n,--n", n, "number of parties")->required();
  construct->add_option("--unitaries", unitaries_file, "JSON file of local unitaries");
  auto* certify = app.add_subcommand("certify", "sampled A/B certification rounds");
  add_common(certify, true);
  certify->add_option("--state", state_file, "JSON state file (default: the unique stabilized state)");
  certify->add_option("--shots", opt.shots, "number of rounds")->check(CLI::PositiveNumber);
  certify->add_option("--seed", opt.seed, "random seed");
  certify->add_option("--threshold", opt.threshold, "pass threshold on both means");
  certify->add_option("--a-fraction", opt.a_fraction, "probability of an A round");
  auto* verify = app.add_subcommand("verify", "oracle cross-check, identity residuals, purity check");
  add_common(verify, true);
  verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--trials", opt.trials, "purity check trials")->check(CLI::PositiveNumber);
  verify->add_option("--env-dim", opt.env_dim, "environment dimension")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (tol > 0.0) opt.tol = tol;
  if (!mode.empty()) opt.mode = mode == "exact" ? ghz::AngleMode::exact : ghz::AngleMode::approx;

  try {
    json out;
    if (classify->parsed()) {
      out = ghz::cli::cmd_classify(read_json(input), opt);
    } else if (solve->parsed()) {
      out = ghz::cli::cmd_solve(read_json(input), opt);
    } else if (construct->parsed()) {
      out = ghz::cli::cmd_construct(n, read_optional(unitaries_file), opt);
    } else if (certify->parsed()) {
      const json angles = read_json(input);
      out = ghz::cli::cmd_certify(angles, read_optional(state_file), opt);
    } else {
      out = ghz::cli::cmd_verify(read_json(input), opt);
    }
    std::cout << out.dump(pretty ? 2 : -1) << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "ghzstab: " << e.what() << '\n';
    return ghz::cli::exit_code_for(e);
  }
}
