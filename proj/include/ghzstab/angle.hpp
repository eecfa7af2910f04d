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

#ifndef GHZSTAB_ANGLE_HPP
#define GHZSTAB_ANGLE_HPP

#include <cstdint>
#include <string>
#include <variant>

namespace ghz {

// (num / den) * pi, lowest terms, den > 0.
struct PiFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const PiFraction&, const PiFraction&) = default;
};

// A rotation angle held either exactly as a rational multiple of pi or as raw
// radians. Arithmetic between two exact angles stays exact; anything involving
// a radian value degrades to radians.
class Angle {
 public:
  Angle() = default;

  // Throws DomainError when den == 0; sign is moved to the numerator.
  static Angle pi_fraction(std::int64_t num, std::int64_t den);
  static Angle radians(double value);

  bool is_exact() const { return std::holds_alternative<PiFraction>(v_); }
  // Throws DomainError for a radian angle.
  const PiFraction& exact() const;

  double to_radians() const;

  // Exact multiples of pi/2 give exact 0 / +-1.
  double cos() const;
  double sin() const;

  Angle operator-() const;
  friend Angle operator+(const Angle& a, const Angle& b);
  friend Angle operator-(const Angle& a, const Angle& b);

  // Same representation and same value.
  friend bool operator==(const Angle& a, const Angle& b) = default;

  std::string to_string() const;

 private:
  explicit Angle(PiFraction f) : v_(f) {}
  explicit Angle(double r) : v_(r) {}

  std::variant<PiFraction, double> v_{PiFraction{}};
};

}  // namespace ghz

#endif  // GHZSTAB_ANGLE_HPP
