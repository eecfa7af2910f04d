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

#ifndef GHZSTAB_KERNELS_HPP
#define GHZSTAB_KERNELS_HPP

// Data-parallel inner loops over the 2^N computational basis.
//
// Every kernel exists twice with identical signatures: `serial` is the plain
// reference loop kept for testing, `parallel` is the OpenMP version used by the
// library. Outputs of the two agree exactly for the integer/ordering kernels and
// to rounding for the floating-point reductions.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ghzstab/tensor.hpp"

namespace ghz::kernels {

// Result of scanning all 2^n sign patterns of a signed angle sum.
struct ConditionScan {
  // Sign patterns m (ascending) whose sum satisfies the condition.
  std::vector<std::uint64_t> matches;
  // Some non-matching pattern fell within the fragile band (approx scans only).
  bool fragile = false;
};

// Two complex factors per party: the term used when that party's bit is 0 / 1.
struct BitFactors {
  cplx zero;
  cplx one;
};

enum class Exec { serial, parallel };

namespace serial {

// Matches m with sum_l (-1)^{m_l} weights[l] divisible by modulus. weights[0] is party 1.
ConditionScan scan_exact(std::span<const std::int64_t> weights, std::int64_t modulus);

// Matches m with |sin(s_m / 2)| <= tol, s_m = sum_l (-1)^{m_l} radians[l];
// fragile if a non-match has |sin(s_m / 2)| <= fragile_tol.
ConditionScan scan_approx(std::span<const double> radians, double tol, double fragile_tol);

// In-place application of the tensor product of 2x2 locals (locals[0] is party 1).
void apply_product(std::span<const Mat2> locals, CVector& state);

// Dense 2^n x 2^n matrix of the tensor product, entry-by-entry.
CMatrix materialize_product(std::span<const Mat2> locals);

// Block of the tensor product restricted to even-parity rows and columns,
// both in ascending order.
CMatrix even_parity_block(std::span<const Mat2> locals);

// All 2^N rows of the tensor product restricted to even-parity columns (ascending).
CMatrix even_parity_columns(std::span<const Mat2> locals);

// (sum over even-weight strings, sum over odd-weight strings) of prod_l factor_l(bit_l).
std::pair<cplx, cplx> parity_split_sums(std::span<const BitFactors> factors);

}  // namespace serial

namespace parallel {

ConditionScan scan_exact(std::span<const std::int64_t> weights, std::int64_t modulus);
ConditionScan scan_approx(std::span<const double> radians, double tol, double fragile_tol);
void apply_product(std::span<const Mat2> locals, CVector& state);
CMatrix materialize_product(std::span<const Mat2> locals);
CMatrix even_parity_block(std::span<const Mat2> locals);
CMatrix even_parity_columns(std::span<const Mat2> locals);
std::pair<cplx, cplx> parity_split_sums(std::span<const BitFactors> factors);

}  // namespace parallel

// Ascending list of the even-parity indices in [0, 2^n).
std::vector<std::uint64_t> even_parity_indices(int n);

}  // namespace ghz::kernels

#endif  // GHZSTAB_KERNELS_HPP
