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

#include "ghzstab/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ghzstab/errors.hpp"

namespace ghz {
namespace {

// Columns: +1 eigenvector, -1 eigenvector.
Mat2 measurement_basis(const Mat2& local) {
  const Eigen::Vector2cd up = plus_eigenvector(local);
  Mat2 w;
  w.col(0) = up;
  w.col(1) << -std::conj(up[1]), std::conj(up[0]);
  return w;
}

// Probability of the +1 outcome on `party` (0-based).
double up_probability(const CVector& amps, int n, int party, const Mat2& w) {
  const std::uint64_t stride = std::uint64_t{1} << (n - 1 - party);
  double p = 0.0;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amps.size()); ++i) {
    if (i & stride) continue;
    const cplx c = std::conj(w(0, 0)) * amps[static_cast<Eigen::Index>(i)] +
                   std::conj(w(1, 0)) * amps[static_cast<Eigen::Index>(i | stride)];
    p += std::norm(c);
  }
  return p;
}

// Projects party onto column `outcome` of w and renormalizes by `prob`.
void collapse(CVector& amps, int n, int party, const Mat2& w, int outcome, double prob) {
  const std::uint64_t stride = std::uint64_t{1} << (n - 1 - party);
  const double scale = 1.0 / std::sqrt(prob);
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amps.size()); ++i) {
    if (i & stride) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | stride);
    const cplx c = (std::conj(w(0, outcome)) * amps[i0] + std::conj(w(1, outcome)) * amps[i1]) * scale;
    amps[i0] = c * w(0, outcome);
    amps[i1] = c * w(1, outcome);
  }
}

void sequential_tree(const CVector& amps, int n, int party, const std::vector<Mat2>& bases, double weight,
                     std::uint64_t pattern, std::vector<double>& out) {
  if (party == n) {
    out[pattern] += weight;
    return;
  }
  const double p_up = std::clamp(up_probability(amps, n, party, bases[static_cast<std::size_t>(party)]), 0.0, 1.0);
  const double probs[2] = {p_up, 1.0 - p_up};
  for (int outcome = 0; outcome < 2; ++outcome) {
    if (probs[outcome] <= 1e-300) continue;
    CVector next = amps;
    collapse(next, n, party, bases[static_cast<std::size_t>(party)], outcome, probs[outcome]);
    const std::uint64_t bit = static_cast<std::uint64_t>(outcome) << (n - 1 - party);
    sequential_tree(next, n, party + 1, bases, weight * probs[outcome], pattern | bit, out);
  }
}

RoundOutcome outcome_from_pattern(std::uint64_t pattern, int n) {
  RoundOutcome r;
  r.outcomes.resize(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    r.outcomes[static_cast<std::size_t>(l)] = ((pattern >> (n - 1 - l)) & 1) ? -1 : 1;
    r.product *= r.outcomes[static_cast<std::size_t>(l)];
  }
  return r;
}

struct Tally {
  std::int64_t sum_a = 0, count_a = 0, sum_b = 0, count_b = 0;
};

void finish(const Tally& t, double threshold, CertReport& r) {
  auto stats = [](std::int64_t sum, std::int64_t count, double& mean, double& se) {
    if (count == 0) {
      mean = 0.0;
      se = 0.0;
      return;
    }
    mean = static_cast<double>(sum) / static_cast<double>(count);
    // Outcomes are +-1, so the sample variance is count/(count-1) * (1 - mean^2).
    const double var = count > 1 ? std::max(0.0, 1.0 - mean * mean) * count / (count - 1.0) : 0.0;
    se = std::sqrt(var / static_cast<double>(count));
  };
  r.count_a = t.count_a;
  r.count_b = t.count_b;
  stats(t.sum_a, t.count_a, r.mean_a, r.stderr_a);
  stats(t.sum_b, t.count_b, r.mean_b, r.stderr_b);
  r.pass = t.count_a > 0 && t.count_b > 0 && r.mean_a >= threshold && r.mean_b >= threshold;
}

}  // namespace

void CertificationConfig::validate() const {
  if (shots < 1) throw DomainError("shots must be at least 1");
  if (!(a_fraction > 0.0 && a_fraction < 1.0)) throw DomainError("a_fraction must lie in (0, 1)");
  if (!(pass_threshold > 0.0 && pass_threshold <= 1.0)) throw DomainError("pass_threshold must lie in (0, 1]");
}

RoundOutcome measure_round(const StateVector& state, const ProductObservable& obs, Rng& rng) {
  require_shape(state.dim() == obs.dim(), "state and observable dimensions differ");
  const int n = obs.n_parties();
  CVector amps = state.amplitudes();
  RoundOutcome r;
  r.outcomes.resize(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    const Mat2 w = measurement_basis(obs.locals()[static_cast<std::size_t>(l)]);
    const double p_up = std::clamp(up_probability(amps, n, l, w), 0.0, 1.0);
    const int outcome = uniform01(rng) < p_up ? 0 : 1;
    collapse(amps, n, l, w, outcome, outcome == 0 ? p_up : 1.0 - p_up);
    r.outcomes[static_cast<std::size_t>(l)] = outcome == 0 ? 1 : -1;
    r.product *= r.outcomes[static_cast<std::size_t>(l)];
  }
  return r;
}

RoundOutcome measure_round(const StateVector& state, const DirectionList& d, Rng& rng) {
  return measure_round(state, product_observable(d), rng);
}

std::vector<double> joint_outcome_distribution(const StateVector& state, const ProductObservable& obs) {
  require_shape(state.dim() == obs.dim(), "state and observable dimensions differ");
  std::vector<Mat2> rot;
  for (const Mat2& local : obs.locals()) rot.push_back(measurement_basis(local).adjoint());
  CVector amps = state.amplitudes();
  kernels::serial::apply_product(rot, amps);
  std::vector<double> p(static_cast<std::size_t>(amps.size()));
  for (Eigen::Index i = 0; i < amps.size(); ++i) p[static_cast<std::size_t>(i)] = std::norm(amps[i]);
  return p;
}

std::vector<double> sequential_outcome_distribution(const StateVector& state, const ProductObservable& obs) {
  require_shape(state.dim() == obs.dim(), "state and observable dimensions differ");
  std::vector<Mat2> bases;
  for (const Mat2& local : obs.locals()) bases.push_back(measurement_basis(local));
  std::vector<double> out(state.dim(), 0.0);
  sequential_tree(state.amplitudes(), obs.n_parties(), 0, bases, 1.0, 0, out);
  return out;
}

RoundOutcome sample_joint(const StateVector& state, const ProductObservable& obs, Rng& rng) {
  const std::vector<double> p = joint_outcome_distribution(state, obs);
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  const double u = uniform01(rng) * total;
  double acc = 0.0;
  std::uint64_t pick = p.size() - 1;
  for (std::uint64_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    if (u < acc) {
      pick = i;
      break;
    }
  }
  return outcome_from_pattern(pick, obs.n_parties());
}

CertReport run_certification(const Ensemble& ensemble, const ProductObservable& a, const ProductObservable& b,
                             const CertificationConfig& cfg, kernels::Exec exec) {
  cfg.validate();
  if (ensemble.states.empty() || ensemble.states.size() != ensemble.weights.size())
    throw DomainError("ensemble needs one weight per state and at least one state");
  require_shape(a.dim() == b.dim(), "observables act on different dimensions");
  for (const auto& s : ensemble.states) require_shape(s.dim() == a.dim(), "ensemble state has the wrong dimension");
  std::vector<double> cumulative;
  double total = 0.0;
  for (double w : ensemble.weights) {
    if (!(w >= 0.0)) throw DomainError("ensemble weights must be nonnegative");
    total += w;
    cumulative.push_back(total);
  }
  if (total <= 0.0) throw DomainError("ensemble weights sum to zero");
  std::vector<StateVector> states;
  for (const auto& s : ensemble.states) states.push_back(s.normalized());

  std::int64_t sum_a = 0, count_a = 0, sum_b = 0, count_b = 0;
  const std::int64_t shots = cfg.shots;
  const bool par = exec == kernels::Exec::parallel;
#pragma omp parallel for schedule(static) reduction(+ : sum_a, count_a, sum_b, count_b) if (par)
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    Rng rng = stream_rng(cfg.seed, static_cast<std::uint64_t>(shot));
    const bool a_round = uniform01(rng) < cfg.a_fraction;
    std::size_t which = 0;
    if (states.size() > 1) {
      const double u = uniform01(rng) * total;
      which = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
      which = std::min(which, states.size() - 1);
    }
    const RoundOutcome r = measure_round(states[which], a_round ? a : b, rng);
    if (a_round) {
      sum_a += r.product;
      ++count_a;
    } else {
      sum_b += r.product;
      ++count_b;
    }
  }
  CertReport report;
  finish(Tally{sum_a, count_a, sum_b, count_b}, cfg.pass_threshold, report);
  return report;
}

CertReport run_certification(const StateVector& state, const DirectionList& d, const CertificationConfig& cfg,
                             kernels::Exec exec) {
  return run_certification(Ensemble{{state}, {1.0}}, d, cfg, exec);
}

CertReport run_certification(const Ensemble& ensemble, const DirectionList& d, const CertificationConfig& cfg,
                             kernels::Exec exec) {
  return run_certification(ensemble, product_observable(d), sigma_z_product(d.n_parties()), cfg, exec);
}

Ensemble maximally_mixed_ensemble(int n) {
  Ensemble e;
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < dim; ++x) {
    e.states.push_back(StateVector::basis(n, x));
    e.weights.push_back(1.0);
  }
  return e;
}

}  // namespace ghz
