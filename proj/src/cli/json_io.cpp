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

#include "ghzstab/cli/json_io.hpp"

#include <cmath>

#include "ghzstab/bits.hpp"
#include "ghzstab/errors.hpp"

namespace ghz::cli {
namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw DomainError(where + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw DomainError(where + " is missing field '" + key + "'");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw DomainError(what + " must be an integer");
  return j.get<std::int64_t>();
}

double as_real(const json& j, const std::string& what) {
  if (!j.is_number()) throw DomainError(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw DomainError(what + " must be finite");
  return v;
}

std::string label_of(std::uint64_t index, int n) { return BitString(n, index).to_string(); }

}  // namespace

Angle angle_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("angle must be an object with pi_num/pi_den or rad");
  if (j.contains("rad")) {
    if (j.contains("pi_num") || j.contains("pi_den")) throw DomainError("angle mixes rad with pi_num/pi_den");
    return Angle::radians(as_real(j.at("rad"), "rad"));
  }
  const std::int64_t num = as_int(field(j, "pi_num", "angle"), "pi_num");
  const std::int64_t den = as_int(field(j, "pi_den", "angle"), "pi_den");
  if (den <= 0) throw DomainError("pi_den must be positive");
  return Angle::pi_fraction(num, den);
}

json angle_to_json(const Angle& a) {
  if (a.is_exact()) return json{{"pi_num", a.exact().num}, {"pi_den", a.exact().den}};
  return json{{"rad", a.to_radians()}};
}

AngleFile parse_angle_file(const json& j) {
  const std::int64_t n = as_int(field(j, "n", "angle file"), "n");
  if (n < 1) throw DomainError("n must be at least 1");
  const json& angles = field(j, "angles", "angle file");
  if (!angles.is_array()) throw DomainError("angles must be an array");
  if (static_cast<std::int64_t>(angles.size()) != n)
    throw ShapeError("n = " + std::to_string(n) + " but " + std::to_string(angles.size()) + " angle records given");
  std::vector<Angle> thetas, phis;
  for (std::size_t l = 0; l < angles.size(); ++l) {
    const std::string where = "angles[" + std::to_string(l) + "]";
    thetas.push_back(angle_from_json(field(angles[l], "theta", where)));
    phis.push_back(angle_from_json(field(angles[l], "phi", where)));
  }
  AngleFile out{DirectionList(std::move(thetas), std::move(phis)), std::nullopt, std::nullopt};
  if (j.contains("tol")) {
    out.tol = as_real(j.at("tol"), "tol");
    if (*out.tol <= 0.0) throw DomainError("tol must be positive");
  }
  if (j.contains("mode")) {
    if (!j.at("mode").is_string()) throw DomainError("mode must be \"exact\" or \"approx\"");
    const auto m = j.at("mode").get<std::string>();
    if (m == "exact")
      out.mode = AngleMode::exact;
    else if (m == "approx")
      out.mode = AngleMode::approx;
    else
      throw DomainError("mode must be \"exact\" or \"approx\", got \"" + m + "\"");
  }
  return out;
}

json angle_file_to_json(const AngleFile& f) {
  json angles = json::array();
  for (int l = 0; l < f.directions.n_parties(); ++l)
    angles.push_back({{"theta", angle_to_json(f.directions.thetas()[static_cast<std::size_t>(l)])},
                      {"phi", angle_to_json(f.directions.phis()[static_cast<std::size_t>(l)])}});
  json j{{"n", f.directions.n_parties()}, {"angles", std::move(angles)}};
  if (f.tol) j["tol"] = *f.tol;
  if (f.mode) j["mode"] = std::string(to_string(*f.mode));
  return j;
}

json records_to_json(const SparseState& s) {
  json recs = json::array();
  for (const auto& a : s) recs.push_back({{"index", a.index}, {"label", a.label}, {"re", a.re}, {"im", a.im}});
  return recs;
}

SparseState records_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("amplitude list must be an array");
  SparseState recs;
  for (const auto& a : j) {
    const std::int64_t index = as_int(field(a, "index", "amplitude"), "index");
    if (index < 0) throw DomainError("amplitude index must be nonnegative");
    std::string label;
    if (a.contains("label")) {
      if (!a.at("label").is_string()) throw DomainError("label must be a string");
      label = a.at("label").get<std::string>();
    }
    recs.push_back({static_cast<std::uint64_t>(index), std::move(label), as_real(field(a, "re", "amplitude"), "re"),
                    as_real(field(a, "im", "amplitude"), "im")});
  }
  return recs;
}

SparseState sparse_amplitudes(const StateVector& s, double cutoff) {
  SparseState out;
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    const cplx a = s[i];
    if (std::abs(a) > cutoff) out.push_back({i, label_of(i, s.n_qubits()), a.real(), a.imag()});
  }
  return out;
}

StateVector state_from_records(int n, const SparseState& records) {
  StateVector s = StateVector::zero(n);
  CVector amps = s.amplitudes();
  for (const auto& r : records) {
    if (r.index >= s.dim()) throw DomainError("amplitude index " + std::to_string(r.index) + " out of range");
    amps[static_cast<Eigen::Index>(r.index)] = cplx(r.re, r.im);
  }
  return StateVector(std::move(amps));
}

json report_to_json(const Report& r) {
  json j{{"case", r.case_name}, {"m_set", r.m_set}};
  if (r.dimension) j["dimension"] = *r.dimension;
  if (r.states) {
    json states = json::array();
    for (const auto& s : *r.states) states.push_back(records_to_json(s));
    j["states"] = std::move(states);
  }
  if (r.residuals) j["residuals"] = *r.residuals;
  if (r.sector_dims) j["sector_dims"] = *r.sector_dims;
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  const json& c = field(j, "case", "report");
  if (!c.is_string()) throw DomainError("case must be a string");
  r.case_name = c.get<std::string>();
  const json& m = field(j, "m_set", "report");
  if (!m.is_array()) throw DomainError("m_set must be an array");
  for (const auto& e : m) {
    if (!e.is_string()) throw DomainError("m_set entries must be strings");
    r.m_set.push_back(BitString::parse(e.get<std::string>()).to_string());
  }
  if (j.contains("dimension")) r.dimension = static_cast<std::size_t>(as_int(j.at("dimension"), "dimension"));
  if (j.contains("states")) {
    if (!j.at("states").is_array()) throw DomainError("states must be an array");
    std::vector<SparseState> states;
    for (const auto& s : j.at("states")) states.push_back(records_from_json(s));
    r.states = std::move(states);
  }
  if (j.contains("residuals")) r.residuals = as_real(j.at("residuals"), "residuals");
  if (j.contains("sector_dims")) {
    const json& s = j.at("sector_dims");
    if (!s.is_array() || s.size() != 4) throw DomainError("sector_dims must be 4 integers");
    std::array<std::size_t, 4> d{};
    for (std::size_t i = 0; i < 4; ++i) d[i] = static_cast<std::size_t>(as_int(s[i], "sector_dims entry"));
    r.sector_dims = d;
  }
  if (j.contains("warnings")) r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

}  // namespace ghz::cli
