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

#ifndef GHZSTAB_RNG_HPP
#define GHZSTAB_RNG_HPP

#include <cstdint>
#include <random>

#include "ghzstab/tensor.hpp"

namespace ghz {

using Rng = std::mt19937_64;

// Independent generator for stream `index` of a seeded run; streams depend only
// on (seed, index), so per-trial work can run in any order.
Rng stream_rng(std::uint64_t seed, std::uint64_t index);

// Uniform in [0, 1) from the top 53 bits.
double uniform01(Rng& rng);

// Entries i.i.d. standard complex Gaussian.
CMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

// Haar-random 2x2 unitary.
Mat2 random_unitary2(Rng& rng);

}  // namespace ghz

#endif  // GHZSTAB_RNG_HPP
