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

#include <doctest.h>

#include <cmath>

#include "ghzstab/certify.hpp"
#include "ghzstab/eigensolver.hpp"
#include "ghzstab/errors.hpp"
#include "ghzstab/ghz.hpp"
#include "support.hpp"

using namespace ghz;

namespace {

// Outcome distribution from the dense spectral projectors of each local factor.
std::vector<double> projector_distribution(const StateVector& s, const DirectionList& d) {
  const int n = d.n_parties();
  std::vector<Eigen::Matrix2cd> plus, minus;
  for (int l = 0; l < n; ++l) {
    const Eigen::Matrix2cd a = support::spin(d.thetas()[static_cast<std::size_t>(l)].to_radians(),
                                             d.phis()[static_cast<std::size_t>(l)].to_radians());
    plus.push_back((Eigen::Matrix2cd::Identity() + a) / 2.0);
    minus.push_back((Eigen::Matrix2cd::Identity() - a) / 2.0);
  }
  std::vector<double> p(s.dim());
  for (std::uint64_t x = 0; x < s.dim(); ++x) {
    std::vector<Eigen::Matrix2cd> proj;
    for (int l = 0; l < n; ++l) proj.push_back(((x >> (n - 1 - l)) & 1) ? minus[static_cast<std::size_t>(l)] : plus[static_cast<std::size_t>(l)]);
    p[x] = (s.amplitudes().adjoint() * support::dense_product(proj) * s.amplitudes())(0, 0).real();
  }
  return p;
}

}  // namespace

TEST_CASE("joint and sequential outcome distributions agree with dense projectors") {
  Rng rng = stream_rng(60, 0);
  for (int n = 1; n <= 4; ++n) {
    const DirectionList d = support::random_instance(n, support::Kind::generic, rng);
    const StateVector s = StateVector(complex_gaussian(Eigen::Index{1} << n, 1, rng)).normalized();
    const ProductObservable a = product_observable(d);
    const auto ref = projector_distribution(s, d);
    const auto joint = joint_outcome_distribution(s, a);
    const auto seq = sequential_outcome_distribution(s, a);
    for (std::size_t x = 0; x < ref.size(); ++x) {
      CHECK(std::abs(joint[x] - ref[x]) < 1e-12);
      CHECK(std::abs(seq[x] - ref[x]) < 1e-12);
    }
  }
}

TEST_CASE("sampled frequencies follow the outcome distribution") {
  Rng rng = stream_rng(61, 0);
  const DirectionList d = support::random_instance(3, support::Kind::generic, rng);
  const StateVector s = StateVector(complex_gaussian(8, 1, rng)).normalized();
  const ProductObservable a = product_observable(d);
  const auto p = joint_outcome_distribution(s, a);
  const int shots = 40000;
  std::vector<int> seq(8, 0), joint(8, 0);
  Rng draw = stream_rng(62, 0);
  for (int k = 0; k < shots; ++k) {
    for (auto* counts : {&seq, &joint}) {
      const RoundOutcome r = counts == &seq ? measure_round(s, a, draw) : sample_joint(s, a, draw);
      std::uint64_t x = 0;
      int prod = 1;
      for (int o : r.outcomes) {
        x = (x << 1) | (o < 0 ? 1u : 0u);
        prod *= o;
      }
      CHECK(prod == r.product);
      ++(*counts)[x];
    }
  }
  for (std::size_t x = 0; x < 8; ++x) {
    const double sigma = std::sqrt(p[x] * (1.0 - p[x]) / shots);
    CHECK(std::abs(seq[x] / double(shots) - p[x]) <= 5.0 * sigma + 1e-12);
    CHECK(std::abs(joint[x] / double(shots) - p[x]) <= 5.0 * sigma + 1e-12);
  }
}

TEST_CASE("unique stabilized state passes with unit means") {
  const DirectionList d = canonical_angles(3);
  const StateVector s = solve_common_eigenspace(d).basis.vector(0);
  CertificationConfig cfg;
  cfg.seed = 4;
  const CertReport r = run_certification(s, d, cfg);
  CHECK(r.mean_a == 1.0);
  CHECK(r.mean_b == 1.0);
  CHECK(r.count_a + r.count_b == cfg.shots);
  CHECK(r.pass);
}

TEST_CASE("|000> under canonical angles fails with mean_a near the product of cosines") {
  const DirectionList d = canonical_angles(3);
  CertificationConfig cfg;
  cfg.seed = 8;
  const CertReport r = run_certification(StateVector::basis(3, 0), d, cfg);
  CHECK_FALSE(r.pass);
  CHECK(r.mean_b == 1.0);
  CHECK(std::abs(r.mean_a - (-0.125)) <= 5.0 * r.stderr_a);
}

TEST_CASE("single-party outcomes on the stabilized state are unbiased") {
  const DirectionList d = canonical_angles(3);
  const StateVector s = solve_common_eigenspace(d).basis.vector(0);
  const ProductObservable a = product_observable(d);
  const int shots = 20000;
  std::vector<double> sum(3, 0.0);
  for (int k = 0; k < shots; ++k) {
    Rng rng = stream_rng(70, static_cast<std::uint64_t>(k));
    const RoundOutcome r = measure_round(s, a, rng);
    CHECK(r.product == 1);
    for (int l = 0; l < 3; ++l) sum[static_cast<std::size_t>(l)] += r.outcomes[static_cast<std::size_t>(l)];
  }
  for (double x : sum) CHECK(std::abs(x / shots) <= 5.0 / std::sqrt(double(shots)));
}

TEST_CASE("certification is deterministic and independent of execution order") {
  const DirectionList d = canonical_angles(4);
  const Ensemble mixed = maximally_mixed_ensemble(4);
  CertificationConfig cfg;
  cfg.shots = 3000;
  cfg.seed = 99;
  const CertReport a = run_certification(mixed, d, cfg, kernels::Exec::parallel);
  const CertReport b = run_certification(mixed, d, cfg, kernels::Exec::parallel);
  const CertReport c = run_certification(mixed, d, cfg, kernels::Exec::serial);
  CHECK(a == b);
  CHECK(a == c);
  CHECK_FALSE(a.pass);
  cfg.seed = 100;
  CHECK_FALSE(run_certification(mixed, d, cfg) == a);
}

TEST_CASE("configuration and ensemble validation") {
  const DirectionList d = canonical_angles(2);
  CertificationConfig cfg;
  cfg.shots = 0;
  CHECK_THROWS_AS(run_certification(canonical_ghz(2), d, cfg), DomainError);
  cfg = {};
  cfg.a_fraction = 1.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.pass_threshold = 0.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  CHECK_THROWS_AS(run_certification(Ensemble{{canonical_ghz(2)}, {-1.0}}, d, CertificationConfig{}), DomainError);
  CHECK_THROWS_AS(run_certification(Ensemble{{}, {}}, d, CertificationConfig{}), DomainError);
  CHECK_THROWS_AS(run_certification(canonical_ghz(3), d, CertificationConfig{}), ShapeError);
}
