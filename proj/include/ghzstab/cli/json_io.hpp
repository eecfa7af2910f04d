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

#ifndef GHZSTAB_CLI_JSON_IO_HPP
#define GHZSTAB_CLI_JSON_IO_HPP

// JSON wire formats of the command-line front end.
//
// Angle file:
//   {"n": 2,
//    "angles": [{"theta": {"pi_num": 1, "pi_den": 2}, "phi": {"rad": 0.0}}, ...],
//    "tol": 1e-9,            optional
//    "mode": "exact"}        optional, "exact" | "approx"
//
// Report:
//   {"case": "UniqueGHZ", "m_set": ["01"], "dimension": 1,
//    "states": [[{"index": 0, "label": "00", "re": 0.707.., "im": 0.0}, ...]],
//    "residuals": 1e-16, "sector_dims": [1, 1, 1, 1], "warnings": [...]}
// Only "case" and "m_set" are mandatory. Each entry of "states" is one basis
// vector, listed sparsely (amplitudes with modulus above 1e-12).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghzstab/classifier.hpp"
#include "ghzstab/observables.hpp"
#include "ghzstab/tensor.hpp"

namespace ghz::cli {

using json = nlohmann::json;

struct AngleFile {
  DirectionList directions;
  std::optional<double> tol;
  std::optional<AngleMode> mode;
};

// Malformed input raises DomainError / ShapeError with a readable message.
Angle angle_from_json(const json& j);
json angle_to_json(const Angle& a);
AngleFile parse_angle_file(const json& j);
json angle_file_to_json(const AngleFile& f);

struct AmplitudeRecord {
  std::uint64_t index = 0;
  std::string label;
  double re = 0.0;
  double im = 0.0;

  friend bool operator==(const AmplitudeRecord&, const AmplitudeRecord&) = default;
};

using SparseState = std::vector<AmplitudeRecord>;

// A JSON array of {index, label, re, im}; label is optional on input.
json records_to_json(const SparseState& s);
SparseState records_from_json(const json& j);

SparseState sparse_amplitudes(const StateVector& s, double cutoff = 1e-12);
// Rebuilds a dense n-qubit vector; indices out of range are a DomainError.
StateVector state_from_records(int n, const SparseState& records);

struct Report {
  std::string case_name;
  std::vector<std::string> m_set;
  std::optional<std::size_t> dimension;
  std::optional<std::vector<SparseState>> states;
  std::optional<double> residuals;
  std::optional<std::array<std::size_t, 4>> sector_dims;
  std::vector<std::string> warnings;

  friend bool operator==(const Report&, const Report&) = default;
};

json report_to_json(const Report& r);
Report report_from_json(const json& j);

}  // namespace ghz::cli

#endif  // GHZSTAB_CLI_JSON_IO_HPP
