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

#ifndef GHZSTAB_CERTIFY_HPP
#define GHZSTAB_CERTIFY_HPP

#include <cstdint>
#include <vector>

#include "ghzstab/kernels.hpp"
#include "ghzstab/observables.hpp"
#include "ghzstab/rng.hpp"
#include "ghzstab/tensor.hpp"

namespace ghz {

struct CertificationConfig {
  std::int64_t shots = 10000;
  // Probability that a round measures A rather than B.
  double a_fraction = 0.5;
  std::uint64_t seed = 0;
  double pass_threshold = 0.999;

  // DomainError unless shots >= 1, 0 < a_fraction < 1, 0 < pass_threshold <= 1.
  void validate() const;
};

struct RoundOutcome {
  // +1 / -1 per party, party 1 first.
  std::vector<int> outcomes;
  int product = 1;
};

// Party-by-party projective measurement of each local observable with Born-rule
// sampling and collapse.
RoundOutcome measure_round(const StateVector& state, const ProductObservable& obs, Rng& rng);
RoundOutcome measure_round(const StateVector& state, const DirectionList& d, Rng& rng);

// Same statistics as measure_round, drawn in one step from the joint outcome
// distribution in the rotated basis.
RoundOutcome sample_joint(const StateVector& state, const ProductObservable& obs, Rng& rng);

// Probability of each outcome pattern x (bit of party l set <=> outcome -1),
// computed from the rotated amplitudes.
std::vector<double> joint_outcome_distribution(const StateVector& state, const ProductObservable& obs);

// Same distribution computed by chaining the sequential collapse probabilities.
std::vector<double> sequential_outcome_distribution(const StateVector& state, const ProductObservable& obs);

// Mixture of pure states with nonnegative weights (normalized internally).
struct Ensemble {
  std::vector<StateVector> states;
  std::vector<double> weights;
};

struct CertReport {
  double mean_a = 0.0;
  double mean_b = 0.0;
  std::int64_t count_a = 0;
  std::int64_t count_b = 0;
  double stderr_a = 0.0;
  double stderr_b = 0.0;
  bool pass = false;

  friend bool operator==(const CertReport&, const CertReport&) = default;
};

// Each shot uses stream_rng(cfg.seed, shot) to pick the setting (A with
// probability a_fraction), the ensemble member, and the outcomes; results do
// not depend on the execution order. pass iff both means reach the threshold.
CertReport run_certification(const Ensemble& ensemble, const ProductObservable& a, const ProductObservable& b,
                             const CertificationConfig& cfg, kernels::Exec exec = kernels::Exec::parallel);

// A = product_observable(d), B = Z^(x)N.
CertReport run_certification(const StateVector& state, const DirectionList& d, const CertificationConfig& cfg,
                             kernels::Exec exec = kernels::Exec::parallel);
CertReport run_certification(const Ensemble& ensemble, const DirectionList& d, const CertificationConfig& cfg,
                             kernels::Exec exec = kernels::Exec::parallel);

// Equal-weight ensemble of all computational basis states (the maximally mixed state).
Ensemble maximally_mixed_ensemble(int n);

}  // namespace ghz

#endif  // GHZSTAB_CERTIFY_HPP
