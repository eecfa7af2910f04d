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

#include <omp.h>

#include <bit>
#include <cmath>

#include "ghzstab/errors.hpp"
#include "ghzstab/kernels.hpp"

namespace ghz::kernels::parallel {
namespace {

// Below this many basis states the thread start-up costs more than the loop.
constexpr std::int64_t kParallelThreshold = 2048;

// Splits [0, total) into fixed chunks so per-chunk results concatenate in order
// regardless of which thread ran which chunk.
constexpr std::int64_t kChunk = 4096;

template <typename Predicate>
ConditionScan chunked_scan(std::int64_t total, Predicate&& classify) {
  const std::int64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(chunks));
  bool fragile = false;
#pragma omp parallel for schedule(dynamic) reduction(|| : fragile) if (total >= kParallelThreshold)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t end = std::min(total, (c + 1) * kChunk);
    auto& out = partial[static_cast<std::size_t>(c)];
    for (std::int64_t m = c * kChunk; m < end; ++m) {
      const int verdict = classify(static_cast<std::uint64_t>(m));
      if (verdict == 1)
        out.push_back(static_cast<std::uint64_t>(m));
      else if (verdict == 2)
        fragile = true;
    }
  }
  ConditionScan result;
  result.fragile = fragile;
  for (auto& p : partial) result.matches.insert(result.matches.end(), p.begin(), p.end());
  return result;
}

}  // namespace

ConditionScan scan_exact(std::span<const std::int64_t> weights, std::int64_t modulus) {
  const int n = static_cast<int>(weights.size());
  return chunked_scan(std::int64_t{1} << n, [&](std::uint64_t m) {
    std::int64_t s = 0;
    for (int l = 0; l < n; ++l) s += ((m >> (n - 1 - l)) & 1) ? -weights[l] : weights[l];
    return s % modulus == 0 ? 1 : 0;
  });
}

ConditionScan scan_approx(std::span<const double> radians, double tol, double fragile_tol) {
  const int n = static_cast<int>(radians.size());
  return chunked_scan(std::int64_t{1} << n, [&](std::uint64_t m) {
    double s = 0.0;
    for (int l = 0; l < n; ++l) s += ((m >> (n - 1 - l)) & 1) ? -radians[l] : radians[l];
    const double v = std::abs(std::sin(0.5 * s));
    if (v <= tol) return 1;
    return v <= fragile_tol ? 2 : 0;
  });
}

void apply_product(std::span<const Mat2> locals, CVector& state) {
  const int n = static_cast<int>(locals.size());
  const auto dim = static_cast<std::int64_t>(state.size());
  require_shape(dim == (std::int64_t{1} << n), "apply_product: state length does not match party count");
  const std::int64_t pairs = dim / 2;
  for (int l = 0; l < n; ++l) {
    const Mat2& u = locals[l];
    const int bit = n - 1 - l;
    const std::int64_t stride = std::int64_t{1} << bit;
#pragma omp parallel for schedule(static) if (dim >= kParallelThreshold)
    for (std::int64_t k = 0; k < pairs; ++k) {
      const std::int64_t i0 = ((k >> bit) << (bit + 1)) | (k & (stride - 1));
      const std::int64_t i1 = i0 | stride;
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
#pragma omp parallel for schedule(static) if (dim * dim >= kParallelThreshold)
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
#pragma omp parallel for schedule(static) if (half * half >= kParallelThreshold)
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
  const auto cols = static_cast<Eigen::Index>(idx.size());
  CMatrix out(rows, cols);
#pragma omp parallel for schedule(static) if (rows * cols >= kParallelThreshold)
  for (Eigen::Index ci = 0; ci < cols; ++ci) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      cplx p = 1.0;
      for (int l = 0; l < n; ++l) {
        const int shift = n - 1 - l;
        p *= locals[l]((static_cast<std::uint64_t>(r) >> shift) & 1, (idx[ci] >> shift) & 1);
      }
      out(r, ci) = p;
    }
  }
  return out;
}

std::pair<cplx, cplx> parity_split_sums(std::span<const BitFactors> factors) {
  const int n = static_cast<int>(factors.size());
  const std::int64_t total = std::int64_t{1} << n;
  double even_re = 0.0, even_im = 0.0, odd_re = 0.0, odd_im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : even_re, even_im, odd_re, odd_im) if (total >= kParallelThreshold)
  for (std::int64_t x = 0; x < total; ++x) {
    cplx p = 1.0;
    for (int l = 0; l < n; ++l) p *= ((x >> (n - 1 - l)) & 1) ? factors[l].one : factors[l].zero;
    if (std::popcount(static_cast<std::uint64_t>(x)) & 1) {
      odd_re += p.real();
      odd_im += p.imag();
    } else {
      even_re += p.real();
      even_im += p.imag();
    }
  }
  return {cplx(even_re, even_im), cplx(odd_re, odd_im)};
}

}  // namespace ghz::kernels::parallel
