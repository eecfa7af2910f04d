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

// Serial reference versus OpenMP kernels. Each benchmark takes N as its argument.

#include <benchmark/benchmark.h>

#include <vector>

#include "ghzstab/kernels.hpp"
#include "ghzstab/rng.hpp"

namespace {

using namespace ghz;
namespace ks = ghz::kernels::serial;
namespace kp = ghz::kernels::parallel;

std::vector<Mat2> locals(int n) {
  Rng rng = stream_rng(9, static_cast<std::uint64_t>(n));
  std::vector<Mat2> out;
  for (int l = 0; l < n; ++l) out.push_back(random_unitary2(rng));
  return out;
}

std::vector<double> radians(int n) {
  Rng rng = stream_rng(11, static_cast<std::uint64_t>(n));
  std::vector<double> out;
  for (int l = 0; l < n; ++l) out.push_back(6.283185307179586 * uniform01(rng));
  return out;
}

std::vector<std::int64_t> weights(int n) {
  std::vector<std::int64_t> out;
  for (int l = 0; l < n; ++l) out.push_back(2 * l + 1);
  return out;
}

std::vector<kernels::BitFactors> factors(int n) {
  std::vector<kernels::BitFactors> out;
  for (int l = 0; l < n; ++l) out.push_back({cplx(0.6, 0.1 * l), cplx(-0.3, 0.8)});
  return out;
}

template <auto Fn>
void apply_product(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto ls = locals(n);
  CVector v = CVector::Ones(Eigen::Index{1} << n);
  for (auto _ : st) {
    Fn(ls, v);
    benchmark::DoNotOptimize(v.data());
  }
}

template <auto Fn>
void matrix_kernel(benchmark::State& st) {
  const auto ls = locals(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Fn(ls));
}

template <auto Fn>
void scan_approx(benchmark::State& st) {
  const auto r = radians(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Fn(r, 1e-9, 1e-8));
}

template <auto Fn>
void scan_exact(benchmark::State& st) {
  const auto w = weights(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Fn(w, 4));
}

template <auto Fn>
void parity_sums(benchmark::State& st) {
  const auto f = factors(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Fn(f));
}

}  // namespace

BENCHMARK(apply_product<ks::apply_product>)->Name("apply_product/serial")->DenseRange(10, 20, 5);
BENCHMARK(apply_product<kp::apply_product>)->Name("apply_product/parallel")->DenseRange(10, 20, 5);
BENCHMARK(matrix_kernel<ks::even_parity_block>)->Name("even_parity_block/serial")->DenseRange(6, 12, 3);
BENCHMARK(matrix_kernel<kp::even_parity_block>)->Name("even_parity_block/parallel")->DenseRange(6, 12, 3);
BENCHMARK(matrix_kernel<ks::even_parity_columns>)->Name("even_parity_columns/serial")->DenseRange(6, 12, 3);
BENCHMARK(matrix_kernel<kp::even_parity_columns>)->Name("even_parity_columns/parallel")->DenseRange(6, 12, 3);
BENCHMARK(scan_approx<ks::scan_approx>)->Name("scan_approx/serial")->DenseRange(10, 20, 5);
BENCHMARK(scan_approx<kp::scan_approx>)->Name("scan_approx/parallel")->DenseRange(10, 20, 5);
BENCHMARK(scan_exact<ks::scan_exact>)->Name("scan_exact/serial")->DenseRange(10, 20, 5);
BENCHMARK(scan_exact<kp::scan_exact>)->Name("scan_exact/parallel")->DenseRange(10, 20, 5);
BENCHMARK(parity_sums<ks::parity_split_sums>)->Name("parity_split_sums/serial")->DenseRange(10, 20, 5);
BENCHMARK(parity_sums<kp::parity_split_sums>)->Name("parity_split_sums/parallel")->DenseRange(10, 20, 5);

BENCHMARK_MAIN();
