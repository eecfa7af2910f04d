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

#ifndef GHZSTAB_EIGENSOLVER_HPP
#define GHZSTAB_EIGENSOLVER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ghzstab/classifier.hpp"
#include "ghzstab/kernels.hpp"
#include "ghzstab/observables.hpp"
#include "ghzstab/tensor.hpp"

namespace ghz {

inline constexpr int kMaxSolverParties = 12;

// Linear system for the amplitudes c_i, i even parity: c_j = sum_i T(j, i) c_i.
// The solver decides rank on T - I stacked with the odd-row block of A.
struct CoefficientMatrix {
  int n = 0;
  // Rows and columns follow `indices` (ascending even-parity basis indices).
  CMatrix entries;
  std::vector<std::uint64_t> indices;
};

// T(j, i) = prod_l <j_l| A_l |i_l> over even-parity j, i. At most 12 parties.
CoefficientMatrix coefficient_matrix(const DirectionList& d);

struct StabilizerReport {
  ClassificationReport classification;
  std::size_t dimension = 0;
  // Orthonormal basis of the common +1 eigenspace in the full 2^N space.
  SubspaceBasis basis = SubspaceBasis::empty(2);
  // max over basis vectors of ||(A - I) v|| and ||(B - I) v||.
  double residuals = 0.0;
  // Singular values of T - I on either side of the rank cut.
  double smallest_kept = 0.0;
  double largest_dropped = 0.0;
};

// Common +1 eigenspace of A = (x) A_l and B = Z^(x)N from the null space of
// T - I. Each basis vector has its first non-negligible amplitude made real
// positive. A residual above 1e-8 raises ConsistencyError.
StabilizerReport solve_common_eigenspace(const DirectionList& d, double tol = kDefaultTol,
                                         std::optional<AngleMode> mode = {});

// Brute force: null space of the stacked matrix [A - I; B - I].
SubspaceBasis oracle_eigenspace(const ProductObservable& a, const ProductObservable& b,
                                double tol = kDefaultTol);

// Index order of sector results: (sA, sB) = (+,+), (+,-), (-,+), (-,-).
inline constexpr std::array<std::pair<int, int>, 4> kSectorSigns{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

// Dimensions of the common +1 eigenspaces of (sA A, sB B), computed by the oracle
// on negated operators and by the solver on sector_transform angles. Any
// disagreement raises ConsistencyError.
// With cross_check = false only the solver is used (no 2^N x 2^N oracle).
std::array<std::size_t, 4> sector_dimensions(const DirectionList& d, double tol = kDefaultTol,
                                             bool cross_check = true);

struct InductionCheck {
  // sum over even / odd weight strings of prod_l (cos t_l)^{1-j_l} (-i sin t_l)^{j_l}
  cplx even_sum;
  cplx odd_sum;
  // |even_sum - cos(sum t)| and |odd_sum + i sin(sum t)|
  double even_residual = 0.0;
  double odd_residual = 0.0;
};

InductionCheck induction_identity(const DirectionList& d,
                                  kernels::Exec exec = kernels::Exec::parallel);

// (odd-sum residual, even-sum residual)
std::pair<double, double> induction_identity_residual(const DirectionList& d);

struct PurityReport {
  std::size_t projector_dim = 0;
  bool empty_projector = false;
  std::size_t env_dim = 0;
  int trials = 0;
  // Entanglement entropy (bits) of each random joint state across system:environment.
  std::vector<double> entropies;
  double max_entropy = 0.0;
  // max ||(A (x) I) Psi - Psi|| and ||(B (x) I) Psi - Psi|| over trials.
  double max_residual = 0.0;
  // One-dimensional projector only: worst fidelity between the reduced system
  // state and the solver's unique state.
  std::optional<double> min_fidelity;
  // One-dimensional projector: product form held and reduced state matched.
  bool product_form_confirmed = false;
};

// Draws random joint states in range(P (x) I_E) by projecting complex Gaussian
// vectors, and measures their system:environment entanglement. Trial t uses
// stream_rng(seed, t). env_dim below the projector rank is a DomainError.
PurityReport purity_security_check(const DirectionList& d, std::size_t env_dim, int trials,
                                   std::uint64_t seed, double tol = kDefaultTol);

// sum over m in Z_2^n of (-1)^{m.v}, by enumeration.
long long character_sum(std::span<const int> v);

// Max deviation of character_sum from its closed form (2^n if every v_l is
// even, else 0) over `samples` random v in {0,1,2}^n. n <= 16.
double fourier_cancellation_check(int n, std::uint64_t seed = 0, int samples = 100);

}  // namespace ghz

#endif  // GHZSTAB_EIGENSOLVER_HPP
