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

#include <bit>
#include <cmath>

#include "ghzstab/errors.hpp"
#include "ghzstab/kernels.hpp"

namespace ghz::kernels {

std::vector<std::uint64_t> even_parity_indices(int n) {
  if (n < 1 || n > 30) throw SizeError("even_parity_indices: n out of range");
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
    if ((std::popcount(x) & 1) == 0) out.push_back(x);
  return out;
}

namespace serial {

ConditionScan scan_exact(std::span<const std::int64_t> weights, std::int64_t modulus) {
  const int n = static_cast<int>(weights.size());
  ConditionScan out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::int64_t s = 0;
    for (int l = 0; l < n; ++l) s += ((m >> (n - 1 - l)) & 1) ? -weights[l] : weights[l];
    if (s % modulus == 0) out.matches.push_back(m);
  }
  return out;
}

ConditionScan scan_approx(std::span<const double> radians, double tol, double fragile_tol) {
  const int n = static_cast<int>(radians.size());
  ConditionScan out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    double s = 0.0;
    for (int l = 0; l < n; ++l) s += ((m >> (n - 1 - l)) & 1) ? -radians[l] : radians[l];
    const double v = std::abs(std::sin(0.5 * s));
    if (v <= tol)
      out.matches.push_back(m);
    else if (v <= fragile_tol)
      out.fragile = true;
  }
  return out;
}

void apply_product(std::span<const Mat2> locals, CVector& state) {
  const int n = static_cast<int>(locals.size());
  const auto dim = static_cast<std::uint64_t>(state.size());
  require_shape(dim == (std::uint64_t{1} << n), "apply_product: state length does not match party count");
  for (int l = 0; l < n; ++l) {
    const Mat2& u = locals[l];
    const std::uint64_t stride = std::uint64_t{1} << (n - 1 - l);
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (i & stride) continue;
      const auto i0 = static_cast<Eigen::Index>(i);
      const auto i1 = static_cast<Eigen::Index>(i | stride);
      const cplx a0 = state[i0];
      const cplx a1 = state[i1];
      state[i0] = u(0, 0) * a0 + u(0, 1) * a1;
      state[i1] = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

CMatrix materialize_product(std::span<const Mat2> locals) {
  const int n = static_cast<int>(locals.size());
  const auto dim = Eigen::Index{1} << n;
  CMatrix out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      cplx p = 1.0;
      for (int l = 0; l < n; ++l) {
        const int shift = n - 1 - l;
        p *= locals[l]((r >> shift) & 1, (c >> shift) & 1);
      }
      out(r, c) = p;
    }
  }
  return out;
}

CMatrix even_parity_block(std::span<const Mat2> locals) {
  const int n = static_cast<int>(locals.size());
  const auto idx = even_parity_indices(n);
  const auto half = static_cast<Eigen::Index>(idx.size());
  CMatrix out(half, half);
  for (Eigen::Index ci = 0; ci < half; ++ci) {
    for (Eigen::Index ri = 0; ri < half; ++ri) {
      const std::uint64_t r = idx[ri], c = idx[ci];
      cplx p = 1.0;
      for (int l = 0; l < n; ++l) {
        const int shift = n - 1 - l;
        p *= locals[l]((r >> shift) & 1, (c >> shift) & 1);
      }
      out(ri, ci) = p;
    }
  }
  return out;
}

CMatrix even_parity_columns(std::span<const Mat2> locals) {
  const int n = static_cast<int>(locals.size());
  const auto idx = even_parity_indices(n);
  const auto rows = Eigen::Index{1} << n;
  CMatrix out(rows, static_cast<Eigen::Index>(idx.size()));
  for (std::size_t ci = 0; ci < idx.size(); ++ci) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      cplx p = 1.0;
      for (int l = 0; l < n; ++l) {
        const int shift = n - 1 - l;
        p *= locals[l]((static_cast<std::uint64_t>(r) >> shift) & 1, (idx[ci] >> shift) & 1);
      }
      out(r, static_cast<Eigen::Index>(ci)) = p;
    }
  }
  return out;
}

std::pair<cplx, cplx> parity_split_sums(std::span<const BitFactors> factors) {
  const int n = static_cast<int>(factors.size());
  cplx even = 0.0, odd = 0.0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    cplx p = 1.0;
    for (int l = 0; l < n; ++l) p *= ((x >> (n - 1 - l)) & 1) ? factors[l].one : factors[l].zero;
    if (std::popcount(x) & 1)
      odd += p;
    else
      even += p;
  }
  return {even, odd};
}

}  // namespace serial
}  // namespace ghz::kernels
