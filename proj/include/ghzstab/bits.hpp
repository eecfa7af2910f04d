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

#ifndef GHZSTAB_BITS_HPP
#define GHZSTAB_BITS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ghz {

inline constexpr int kMaxEnumerationBits = 24;

// An n-bit string; party 1 is the most significant bit.
class BitString {
 public:
  BitString(int n, std::uint64_t bits);

  // "0101" with party 1 leftmost.
  static BitString parse(std::string_view text);

  int size() const { return n_; }
  std::uint64_t bits() const { return bits_; }

  // Bit of party l, 1-based.
  int party(int l) const;
  int parity() const;
  int weight() const;
  BitString complement() const;

  // sum_l a_l b_l
  int dot(const BitString& other) const;

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  int n_;
  std::uint64_t bits_;
};

struct ParityClasses {
  std::vector<BitString> s0;
  std::vector<BitString> s1;
};

// Even/odd split of all 2^n strings, each ascending. 1 <= n <= 24.
ParityClasses parity_classes(int n);

}  // namespace ghz

#endif  // GHZSTAB_BITS_HPP
