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

#include "ghzstab/classifier.hpp"

#include <numeric>

#include "ghzstab/errors.hpp"
#include "ghzstab/kernels.hpp"

namespace ghz {
namespace {

constexpr std::int64_t kWeightLimit = std::int64_t{1} << 58;

// theta_l = (w_l / L) pi over a common denominator L; the sum condition is then
// sum +-w_l == 0 (mod 2L).
kernels::ConditionScan exact_scan(const DirectionList& d) {
  std::int64_t lcm = 1;
  for (const Angle& t : d.thetas()) {
    lcm = std::lcm(lcm, t.exact().den);
    if (lcm <= 0 || lcm > kWeightLimit) throw SizeError("common denominator of the angles is too large");
  }
  std::vector<std::int64_t> weights;
  weights.reserve(d.thetas().size());
  for (const Angle& t : d.thetas()) {
    const __int128 w = static_cast<__int128>(t.exact().num) * (lcm / t.exact().den);
    if (w >= kWeightLimit || w <= -kWeightLimit) throw SizeError("exact angle weight too large");
    weights.push_back(static_cast<std::int64_t>(w));
  }
  return kernels::parallel::scan_exact(weights, 2 * lcm);
}

}  // namespace

std::string_view to_string(AngleMode mode) { return mode == AngleMode::exact ? "exact" : "approx"; }

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::NoCommonEigenstate: return "NoCommonEigenstate";
    case CaseTag::UniqueGHZ: return "UniqueGHZ";
    case CaseTag::Degenerate: return "Degenerate";
  }
  return "?";
}

AngleMode resolve_mode(const DirectionList& d, std::optional<AngleMode> requested) {
  if (!requested) return d.thetas_exact() ? AngleMode::exact : AngleMode::approx;
  if (*requested == AngleMode::exact && !d.thetas_exact())
    throw DomainError("exact mode requested but some theta is given in radians");
  return *requested;
}

Angle signed_angle_sum(const DirectionList& d, const BitString& m) {
  require_shape(m.size() == d.n_parties(), "bit string length does not match party count");
  Angle s = Angle::pi_fraction(0, 1);
  for (int l = 1; l <= d.n_parties(); ++l) {
    const Angle& t = d.thetas()[static_cast<std::size_t>(l - 1)];
    s = m.party(l) ? s - t : s + t;
  }
  return s;
}

MSet m_set(const DirectionList& d, double tol, std::optional<AngleMode> mode) {
  const int n = d.n_parties();
  if (n > kMaxEnumerationBits) throw SizeError("m_set enumeration is limited to 24 parties");
  const AngleMode resolved = resolve_mode(d, mode);

  kernels::ConditionScan scan;
  if (resolved == AngleMode::exact) {
    scan = exact_scan(d);
  } else {
    std::vector<double> radians;
    for (const Angle& t : d.thetas()) radians.push_back(t.to_radians());
    scan = kernels::parallel::scan_approx(radians, tol, 10.0 * tol);
  }

  MSet out;
  out.fragile = scan.fragile;
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m : scan.matches) {
    BitString b(n, m);
    if (m < half) {
      out.sums.push_back(signed_angle_sum(d, b));
      out.members.push_back(b);
    } else {
      out.complements.push_back(b);
    }
  }
  return out;
}

ClassificationReport classify(const DirectionList& d, double tol, std::optional<AngleMode> mode) {
  ClassificationReport r;
  r.mode = resolve_mode(d, mode);
  r.tolerance = tol;
  r.m_set = m_set(d, tol, r.mode);
  const std::size_t k = r.m_set.members.size();
  r.case_tag = k == 0 ? CaseTag::NoCommonEigenstate : (k == 1 ? CaseTag::UniqueGHZ : CaseTag::Degenerate);
  return r;
}

DirectionList sector_transform(const DirectionList& d, int sign_a, int sign_b) {
  if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1))
    throw DomainError("sector signs must be +1 or -1");
  std::vector<Angle> thetas = d.thetas();
  std::vector<Angle> phis = d.phis();
  const Angle pi = Angle::pi_fraction(1, 1);
  if (sign_a == -1) {
    thetas[0] = pi - thetas[0];
    phis[0] = phis[0] + pi;
  }
  if (sign_b == -1) {
    thetas[0] = pi - thetas[0];
    phis[0] = -phis[0];
  }
  return DirectionList(std::move(thetas), std::move(phis));
}

}  // namespace ghz
