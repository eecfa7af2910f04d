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

#include "ghzstab/bits.hpp"

#include <bit>

#include "ghzstab/errors.hpp"

namespace ghz {

BitString::BitString(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > 63) throw SizeError("bit string length " + std::to_string(n) + " outside [1, 63]");
  if (bits >> n) throw DomainError("bit pattern wider than " + std::to_string(n) + " bits");
}

BitString BitString::parse(std::string_view text) {
  if (text.empty() || text.size() > 63) throw DomainError("bit string label must have 1..63 characters");
  std::uint64_t v = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw DomainError("bit string label must contain only 0/1");
    v = (v << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return BitString(static_cast<int>(text.size()), v);
}

int BitString::party(int l) const {
  if (l < 1 || l > n_) throw DomainError("party index out of range");
  return static_cast<int>((bits_ >> (n_ - l)) & 1);
}

int BitString::parity() const { return std::popcount(bits_) & 1; }

int BitString::weight() const { return std::popcount(bits_); }

BitString BitString::complement() const { return BitString(n_, bits_ ^ ((std::uint64_t{1} << n_) - 1)); }

int BitString::dot(const BitString& other) const {
  require_shape(n_ == other.n_, "bit strings differ in length");
  return std::popcount(bits_ & other.bits_);
}

std::string BitString::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int l = 1; l <= n_; ++l)
    if (party(l)) s[static_cast<std::size_t>(l - 1)] = '1';
  return s;
}

ParityClasses parity_classes(int n) {
  if (n < 1 || n > kMaxEnumerationBits) throw SizeError("parity_classes: n must lie in [1, 24]");
  ParityClasses out;
  const std::uint64_t total = std::uint64_t{1} << n;
  out.s0.reserve(total / 2);
  out.s1.reserve(total / 2);
  for (std::uint64_t x = 0; x < total; ++x) (std::popcount(x) & 1 ? out.s1 : out.s0).emplace_back(n, x);
  return out;
}

}  // namespace ghz
