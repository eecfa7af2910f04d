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

#include "ghzstab/cli/commands.hpp"

#include <algorithm>

#include "ghzstab/certify.hpp"
#include "ghzstab/classifier.hpp"
#include "ghzstab/eigensolver.hpp"
#include "ghzstab/errors.hpp"
#include "ghzstab/ghz.hpp"

namespace ghz::cli {
namespace {

struct Resolved {
  DirectionList d;
  double tol;
  std::optional<AngleMode> mode;
};

Resolved resolve(const json& angle_file, const CommandOptions& opt) {
  AngleFile f = parse_angle_file(angle_file);
  const double tol = opt.tol ? *opt.tol : f.tol.value_or(kDefaultTol);
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  return Resolved{std::move(f.directions), tol, opt.mode ? opt.mode : f.mode};
}

std::vector<std::string> labels(const std::vector<BitString>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

Report classification_report(const ClassificationReport& c) {
  Report r;
  r.case_name = std::string(to_string(c.case_tag));
  r.m_set = labels(c.m_set.members);
  if (c.m_set.fragile)
    r.warnings.push_back("an M-set decision lies within 10x the tolerance; classification is fragile");
  return r;
}

Mat2 unitary_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("a unitary must be a 2x2 array of [re, im] pairs");
  Mat2 u;
  for (int r = 0; r < 2; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 2) throw DomainError("a unitary must be a 2x2 array of [re, im] pairs");
    for (int c = 0; c < 2; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw DomainError("unitary entries must be [re, im] number pairs");
      u(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return u;
}

json bloch_file(const ProductObservable& obs) {
  std::vector<Angle> thetas, phis;
  for (const Mat2& local : obs.locals()) {
    const auto [theta, phi] = bloch_angles(local);
    thetas.push_back(Angle::radians(theta));
    phis.push_back(Angle::radians(phi));
  }
  return angle_file_to_json(AngleFile{DirectionList(std::move(thetas), std::move(phis)), std::nullopt, std::nullopt});
}

json cert_to_json(const CertReport& c, const CommandOptions& opt) {
  return json{{"mean_a", c.mean_a},     {"mean_b", c.mean_b},     {"count_a", c.count_a},
              {"count_b", c.count_b},   {"stderr_a", c.stderr_a}, {"stderr_b", c.stderr_b},
              {"pass", c.pass},         {"shots", opt.shots},     {"seed", opt.seed},
              {"threshold", opt.threshold}, {"a_fraction", opt.a_fraction}};
}

}  // namespace

json cmd_classify(const json& angle_file, const CommandOptions& opt) {
  const Resolved in = resolve(angle_file, opt);
  return report_to_json(classification_report(classify(in.d, in.tol, in.mode)));
}

json cmd_solve(const json& angle_file, const CommandOptions& opt) {
  const Resolved in = resolve(angle_file, opt);
  const StabilizerReport s = solve_common_eigenspace(in.d, in.tol, in.mode);
  Report r = classification_report(s.classification);
  r.dimension = s.dimension;
  std::vector<SparseState> states;
  for (std::size_t k = 0; k < s.basis.count(); ++k) states.push_back(sparse_amplitudes(s.basis.vector(k)));
  r.states = std::move(states);
  r.residuals = s.residuals;
  const bool cross = in.d.n_parties() <= kOracleCrossCheckParties;
  r.sector_dims = sector_dimensions(in.d, in.tol, cross);
  if (!cross) r.warnings.push_back("sector_dims computed by the solver only (no dense oracle above 10 parties)");
  return report_to_json(r);
}

json cmd_construct(int n, const std::optional<json>& unitaries, const CommandOptions& opt) {
  if (n < 2) throw DomainError("construct needs n >= 2");
  if (n > kMaxSolverParties) throw SizeError("construct supports at most 12 parties");
  GHZSpec spec = GHZSpec::canonical(n);
  if (unitaries) {
    if (!unitaries->is_object() || !unitaries->contains("unitaries"))
      throw DomainError("unitaries file needs a \"unitaries\" array");
    const json& list = unitaries->at("unitaries");
    if (!list.is_array() || static_cast<int>(list.size()) != n)
      throw ShapeError("expected " + std::to_string(n) + " local unitaries");
    std::vector<Mat2> us;
    for (const auto& u : list) us.push_back(unitary_from_json(u));
    spec = GHZSpec(std::move(us));
  }
  const double tol = opt.tol.value_or(kDefaultTol);
  const StabilizingPair pair = stabilizing_pair_for(spec, tol);

  Report r;
  r.case_name = std::string(to_string(CaseTag::UniqueGHZ));
  r.m_set = {pair.base_m.to_string()};
  r.dimension = pair.oracle_dimension;
  r.states = std::vector<SparseState>{sparse_amplitudes(pair.target)};
  r.residuals = pair.residual;
  return json{{"report", report_to_json(r)},
              {"angles", angle_file_to_json(AngleFile{pair.base_angles, std::nullopt, AngleMode::exact})},
              {"pair", {{"a", bloch_file(pair.a)}, {"b", bloch_file(pair.b)}}}};
}

json cmd_certify(const json& angle_file, const std::optional<json>& state, const CommandOptions& opt) {
  const Resolved in = resolve(angle_file, opt);
  const int n = in.d.n_parties();
  Ensemble ensemble;
  if (!state) {
    const StabilizerReport s = solve_common_eigenspace(in.d, in.tol, in.mode);
    if (s.dimension != 1)
      throw PreconditionError("no state file given and the instance has no unique stabilized state (dimension " +
                              std::to_string(s.dimension) + ")");
    ensemble = Ensemble{{s.basis.vector(0)}, {1.0}};
  } else if (!state->is_object()) {
    throw DomainError("state file must be a JSON object");
  } else if (state->contains("maximally_mixed")) {
    if (state->at("maximally_mixed") != true) throw DomainError("maximally_mixed must be true when given");
    ensemble = maximally_mixed_ensemble(n);
  } else if (state->contains("amplitudes")) {
    ensemble = Ensemble{{state_from_records(n, records_from_json(state->at("amplitudes")))}, {1.0}};
  } else if (state->contains("states")) {
    const json& list = state->at("states");
    if (!list.is_array() || list.empty()) throw DomainError("states must be a nonempty array");
    for (const auto& s : list) ensemble.states.push_back(state_from_records(n, records_from_json(s)));
    if (state->contains("weights")) {
      const json& w = state->at("weights");
      if (!w.is_array() || w.size() != list.size()) throw ShapeError("weights must match states in length");
      for (const auto& x : w) {
        if (!x.is_number()) throw DomainError("weights must be numbers");
        ensemble.weights.push_back(x.get<double>());
      }
    } else {
      ensemble.weights.assign(list.size(), 1.0);
    }
  } else {
    throw DomainError("state file needs \"amplitudes\", \"states\" or \"maximally_mixed\"");
  }
  CertificationConfig cfg;
  cfg.shots = opt.shots;
  cfg.seed = opt.seed;
  cfg.pass_threshold = opt.threshold;
  cfg.a_fraction = opt.a_fraction;
  return cert_to_json(run_certification(ensemble, in.d, cfg), opt);
}

json cmd_verify(const json& angle_file, const CommandOptions& opt) {
  const Resolved in = resolve(angle_file, opt);
  const int n = in.d.n_parties();
  if (n > kOracleCrossCheckParties)
    throw SizeError("verify runs the dense oracle and supports at most " + std::to_string(kOracleCrossCheckParties) +
                    " parties");
  const StabilizerReport s = solve_common_eigenspace(in.d, in.tol, in.mode);
  const SubspaceBasis oracle = oracle_eigenspace(product_observable(in.d), sigma_z_product(n), in.tol);
  const auto [odd_res, even_res] = induction_identity_residual(in.d);
  const std::size_t env_dim = std::max(opt.env_dim, s.dimension);
  const PurityReport p = purity_security_check(in.d, env_dim, opt.trials, opt.seed, in.tol);

  json purity{{"projector_dim", p.projector_dim}, {"empty_projector", p.empty_projector},
              {"env_dim", p.env_dim},             {"trials", p.trials},
              {"max_entropy_bits", p.max_entropy}, {"max_residual", p.max_residual},
              {"product_form_confirmed", p.product_form_confirmed}};
  if (p.min_fidelity) purity["min_fidelity"] = *p.min_fidelity;
  json out{{"case", std::string(to_string(s.classification.case_tag))},
           {"m_set", labels(s.classification.m_set.members)},
           {"solver_dimension", s.dimension},
           {"oracle_dimension", oracle.count()},
           {"dimensions_agree", s.dimension == oracle.count()},
           {"subspace_distance", subspace_distance(s.basis, oracle)},
           {"residuals", s.residuals},
           {"sector_dims", sector_dimensions(in.d, in.tol)},
           {"identity", {{"even_residual", even_res}, {"odd_residual", odd_res}}},
           {"fourier_deviation", fourier_cancellation_check(std::min(n, 16), opt.seed)},
           {"purity", std::move(purity)}};
  if (s.classification.m_set.fragile)
    out["warnings"] = {"an M-set decision lies within 10x the tolerance; classification is fragile"};
  return out;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e) != nullptr) return 2;
  if (dynamic_cast<const nlohmann::json::exception*>(&e) != nullptr) return 2;
  return 3;
}

}  // namespace ghz::cli
