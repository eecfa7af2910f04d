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

#include "ghzstab/angle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "ghzstab/errors.hpp"

namespace ghz {
namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw SizeError("exact angle arithmetic overflowed 64 bits");
  return static_cast<std::int64_t>(v);
}

PiFraction reduce(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  const __int128 g = a == 0 ? 1 : a;
  return {narrow(num / g), narrow(den / g)};
}

// (cos, sin) of (num/den) pi with quarter turns hit exactly.
std::pair<double, double> exact_cos_sin(const PiFraction& f) {
  const std::int64_t period = 2 * f.den;
  std::int64_t r = f.num % period;
  if (r < 0) r += period;
  if ((2 * r) % f.den == 0) {
    switch ((2 * r) / f.den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double x = std::numbers::pi * static_cast<double>(r) / static_cast<double>(f.den);
  return {std::cos(x), std::sin(x)};
}

}  // namespace

Angle Angle::pi_fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("angle denominator must be nonzero");
  return Angle(reduce(num, den));
}

Angle Angle::radians(double value) {
  if (!std::isfinite(value)) throw DomainError("angle must be finite");
  return Angle(value);
}

const PiFraction& Angle::exact() const {
  if (const auto* f = std::get_if<PiFraction>(&v_)) return *f;
  throw DomainError("angle is not an exact multiple of pi");
}

double Angle::to_radians() const {
  if (const auto* f = std::get_if<PiFraction>(&v_))
    return std::numbers::pi * static_cast<double>(f->num) / static_cast<double>(f->den);
  return std::get<double>(v_);
}

double Angle::cos() const {
  if (const auto* f = std::get_if<PiFraction>(&v_)) return exact_cos_sin(*f).first;
  return std::cos(std::get<double>(v_));
}

double Angle::sin() const {
  if (const auto* f = std::get_if<PiFraction>(&v_)) return exact_cos_sin(*f).second;
  return std::sin(std::get<double>(v_));
}

Angle Angle::operator-() const {
  if (const auto* f = std::get_if<PiFraction>(&v_)) return Angle(reduce(-static_cast<__int128>(f->num), f->den));
  return Angle(-std::get<double>(v_));
}

Angle operator+(const Angle& a, const Angle& b) {
  if (a.is_exact() && b.is_exact()) {
    const PiFraction& x = a.exact();
    const PiFraction& y = b.exact();
    return Angle(reduce(static_cast<__int128>(x.num) * y.den + static_cast<__int128>(y.num) * x.den,
                        static_cast<__int128>(x.den) * y.den));
  }
  return Angle(a.to_radians() + b.to_radians());
}

Angle operator-(const Angle& a, const Angle& b) { return a + (-b); }

std::string Angle::to_string() const {
  std::ostringstream os;
  if (const auto* f = std::get_if<PiFraction>(&v_)) {
    os << f->num;
    if (f->den != 1) os << '/' << f->den;
    os << " pi";
  } else {
    os.precision(17);
    os << std::get<double>(v_) << " rad";
  }
  return os.str();
}

}  // namespace ghz
