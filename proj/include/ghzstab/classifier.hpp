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

#ifndef GHZSTAB_CLASSIFIER_HPP
#define GHZSTAB_CLASSIFIER_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "ghzstab/angle.hpp"
#include "ghzstab/bits.hpp"
#include "ghzstab/observables.hpp"
#include "ghzstab/tensor.hpp"

namespace ghz {

enum class AngleMode { exact, approx };

enum class CaseTag { NoCommonEigenstate, UniqueGHZ, Degenerate };

std::string_view to_string(AngleMode mode);
std::string_view to_string(CaseTag tag);

// Sign patterns m with sin(sum_l (-1)^{m_l} theta_l / 2) = 0.
struct MSet {
  // Patterns with m_1 = 0, ascending.
  std::vector<BitString> members;
  // sum_l (-1)^{m_l} theta_l for each member.
  std::vector<Angle> sums;
  // The satisfying patterns with m_1 = 1 (complements of members), ascending.
  std::vector<BitString> complements;
  // Approx mode: some non-member lies within 10x the tolerance.
  bool fragile = false;
};

struct ClassificationReport {
  CaseTag case_tag = CaseTag::NoCommonEigenstate;
  MSet m_set;
  AngleMode mode = AngleMode::exact;
  double tolerance = kDefaultTol;
};

// Exact when every theta is exact and no mode is forced. Requesting exact mode
// with a radian theta is a DomainError.
AngleMode resolve_mode(const DirectionList& d, std::optional<AngleMode> requested);

// sum_l (-1)^{m_l} theta_l; exact when every theta is exact.
Angle signed_angle_sum(const DirectionList& d, const BitString& m);

MSet m_set(const DirectionList& d, double tol = kDefaultTol, std::optional<AngleMode> mode = {});

ClassificationReport classify(const DirectionList& d, double tol = kDefaultTol,
                              std::optional<AngleMode> mode = {});

// Angles whose (+1, +1) analysis reproduces the (sign_a, sign_b) sector of the
// original pair: sign_a = -1 negates A_1 via (pi - t_1, p_1 + pi); sign_b = -1
// conjugates party 1 by X via (pi - t_1, -p_1). Signs other than +-1 are a DomainError.
DirectionList sector_transform(const DirectionList& d, int sign_a, int sign_b);

}  // namespace ghz

#endif  // GHZSTAB_CLASSIFIER_HPP
