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

#ifndef GHZSTAB_GHZ_HPP
#define GHZSTAB_GHZ_HPP

#include <span>
#include <vector>

#include "ghzstab/bits.hpp"
#include "ghzstab/classifier.hpp"
#include "ghzstab/observables.hpp"
#include "ghzstab/tensor.hpp"

namespace ghz {

// (|0...0> + |1...1>) / sqrt(2)
StateVector canonical_ghz(int n);

// An N-GHZ state given as local unitaries applied to canonical_ghz(n).
class GHZSpec {
 public:
  // n >= 2; each U_l must satisfy U U^dagger = I within 1e-12 (DomainError).
  explicit GHZSpec(std::vector<Mat2> local_unitaries);

  static GHZSpec canonical(int n);

  int n() const { return static_cast<int>(unitaries_.size()); }
  const std::vector<Mat2>& local_unitaries() const { return unitaries_; }

  StateVector to_state() const;

 private:
  std::vector<Mat2> unitaries_;
};

// 2x2 reduced density matrix of party l (1-based).
Mat2 single_party_reduced_state(const StateVector& s, int l);

// Odd n: every theta = 2pi/n. Even n: theta_1 = 4pi/(n+1), the rest 2pi/(n+1).
// All phi = 0, all exact. Throws DomainError for n < 2.
DirectionList canonical_angles(int n);

// prod_l (i e^{i phi_l})^{j_l}
cplx phase_beta(const BitString& j, std::span<const Angle> phis);

// Per-party basis |~0> = |0>, |~1> = i (-1)^{m_l} e^{i phi_l} |1>.
struct TildeBasis {
  std::vector<cplx> one_phases;

  int n() const { return static_cast<int>(one_phases.size()); }
  // Columns |~0>, |~1> of party l (1-based).
  Mat2 frame(int l) const;
};

TildeBasis tilde_basis(const DirectionList& d, const BitString& m);

// Normalized sum over even-parity j of (x)_l |~j_l>. Requires m_1 = 0
// (PreconditionError otherwise).
StateVector tilde_state(const DirectionList& d, const BitString& m);

struct StabilizingPair {
  ProductObservable a;
  ProductObservable b;
  StateVector target;
  // Pre-conjugation angles (canonical_angles) and their single M-set member.
  DirectionList base_angles;
  BitString base_m;
  // V_l with a = (x)V_l A_l V_l^dagger and b = (x)V_l Z V_l^dagger.
  std::vector<Mat2> frame_unitaries;
  std::size_t oracle_dimension = 0;
  double residual = 0.0;
};

// Two product observables whose unique common +1 eigenstate is spec.to_state().
// Raises ConsistencyError when the oracle dimension is not 1 or the target
// residual exceeds 1e-9.
StabilizingPair stabilizing_pair_for(const GHZSpec& spec, double tol = kDefaultTol);

struct CaseIIIBasis {
  std::vector<BitString> members;
  // tilde_state(d, m) for each member.
  std::vector<StateVector> candidates;
  std::size_t oracle_dimension = 0;
  // subspace_distance(span(candidates), oracle eigenspace); reported, not asserted.
  double audit_distance = 0.0;
};

// Requires classify(d) == Degenerate (PreconditionError otherwise).
CaseIIIBasis case_iii_ghz_basis(const DirectionList& d, double tol = kDefaultTol);

}  // namespace ghz

#endif  // GHZSTAB_GHZ_HPP
