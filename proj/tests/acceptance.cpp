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

// Acceptance suite: one PASS/FAIL line per criterion. AC9 is an audit and
// never fails the run.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "ghzstab/certify.hpp"
#include "ghzstab/classifier.hpp"
#include "ghzstab/eigensolver.hpp"
#include "ghzstab/ghz.hpp"
#include "support.hpp"

using namespace ghz;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail << "first failure: " << what << "; ";
    pass = pass && cond;
  }
};

int failures = 0;

void run(const char* id, const char* title, double budget_s, bool gating, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0) o.require(secs < budget_s, "runtime " + std::to_string(secs) + " s over budget");
  const char* verdict = !gating ? "INFO" : (o.pass ? "PASS" : "FAIL");
  std::printf("%s %s %s (%.2f s) %s\n", id, verdict, title, secs, o.detail.str().c_str());
  std::fflush(stdout);
  if (gating && !o.pass) ++failures;
}

// The shared random sample for AC2, AC3 and AC9: 200 instances per N, cycling
// through generic, constructed-unique and constructed-degenerate angle sets.
struct Instance {
  DirectionList d;
  StabilizerReport solved;
  SubspaceBasis oracle;
};

std::vector<Instance>& sample() {
  static std::vector<Instance> s = [] {
    std::vector<Instance> out;
    for (int n = 2; n <= 8; ++n) {
      for (int k = 0; k < 200; ++k) {
        Rng rng = stream_rng(2026, static_cast<std::uint64_t>(n * 1000 + k));
        const auto kind = static_cast<support::Kind>(k % 3);
        DirectionList d = support::random_instance(n, kind, rng);
        StabilizerReport r = solve_common_eigenspace(d);
        SubspaceBasis o = oracle_eigenspace(product_observable(d), sigma_z_product(n));
        out.push_back({std::move(d), std::move(r), std::move(o)});
      }
    }
    return out;
  }();
  return s;
}

}  // namespace

int main() {
  run("AC1", "EPR reproduction", 1.0, true, [](Outcome& o) {
    const DirectionList d = support::exact_thetas({{1, 2}, {1, 2}});
    const ClassificationReport c = classify(d);
    const StabilizerReport r = solve_common_eigenspace(d);
    o.require(c.case_tag == CaseTag::UniqueGHZ, "case is not UniqueGHZ");
    o.require(r.dimension == 1, "dimension is not 1");
    const double f = r.dimension == 1 ? fidelity(r.basis.vector(0), canonical_ghz(2)) : 0.0;
    o.require(f >= 1.0 - 1e-10, "fidelity below 1-1e-10");
    o.detail << "fidelity=" << f;
  });

  run("AC2", "oracle equivalence, 200 random instances per N in 2..8", 120.0, true, [](Outcome& o) {
    double worst = 0.0;
    std::size_t mismatches = 0;
    for (const Instance& in : sample()) {
      if (in.solved.dimension != in.oracle.count()) ++mismatches;
      worst = std::max(worst, subspace_distance(in.solved.basis, in.oracle));
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " dimension mismatches");
    o.require(worst <= 1e-7, "subspace distance above 1e-7");
    o.detail << "instances=" << sample().size() << " max_distance=" << worst;
  });

  run("AC3", "case trichotomy on the same sample", 0.0, true, [](Outcome& o) {
    std::size_t counts[3] = {0, 0, 0};
    double worst_fid = 1.0, worst_dist = 0.0;
    for (const Instance& in : sample()) {
      const ClassificationReport& c = in.solved.classification;
      switch (c.case_tag) {
        case CaseTag::NoCommonEigenstate: {
          ++counts[0];
          const auto dims = sector_dimensions(in.d);
          o.require(dims[0] + dims[1] + dims[2] + dims[3] == 0, "case (i) instance with a nonempty sector");
          break;
        }
        case CaseTag::UniqueGHZ: {
          ++counts[1];
          o.require(in.oracle.count() == 1, "case (ii) (+,+) dimension is not 1");
          if (in.solved.dimension == 1) {
            const double f = fidelity(in.solved.basis.vector(0), tilde_state(in.d, c.m_set.members.front()));
            worst_fid = std::min(worst_fid, f);
          }
          break;
        }
        case CaseTag::Degenerate: {
          ++counts[2];
          o.require(in.solved.dimension == in.oracle.count(), "case (iii) dimension differs from oracle");
          worst_dist = std::max(worst_dist, subspace_distance(in.solved.basis, in.oracle));
          break;
        }
      }
    }
    o.require(worst_fid >= 1.0 - 1e-9, "case (ii) fidelity to the tilde state below 1-1e-9");
    o.require(worst_dist <= 1e-7, "case (iii) solution space differs from the oracle eigenspace");
    o.require(counts[0] > 0 && counts[1] > 0 && counts[2] > 0, "sample does not cover all three cases");
    o.detail << "case_i=" << counts[0] << " case_ii=" << counts[1] << " case_iii=" << counts[2]
             << " min_fidelity=" << worst_fid << " max_distance=" << worst_dist;
  });

  run("AC4", "construction sweep", 180.0, true, [](Outcome& o) {
    for (int n = 2; n <= 12; ++n)
      o.require(classify(canonical_angles(n), kDefaultTol, AngleMode::exact).case_tag == CaseTag::UniqueGHZ,
                "canonical_angles(" + std::to_string(n) + ") is not UniqueGHZ");
    double worst = 0.0;
    int trials = 0;
    for (int n = 2; n <= 9; ++n) {
      for (int t = 0; t < 50; ++t) {
        Rng rng = stream_rng(404, static_cast<std::uint64_t>(n * 100 + t));
        std::vector<Mat2> us;
        for (int l = 0; l < n; ++l) us.push_back(random_unitary2(rng));
        const StabilizingPair p = stabilizing_pair_for(GHZSpec(std::move(us)));
        o.require(p.oracle_dimension == 1, "oracle dimension is not 1");
        o.require(p.residual <= 1e-9, "target residual above 1e-9");
        worst = std::max(worst, p.residual);
        ++trials;
      }
    }
    o.detail << "trials=" << trials << " max_residual=" << worst;
  });

  run("AC5", "identity suite", 30.0, true, [](Outcome& o) {
    double worst = 0.0;
    for (int n = 1; n <= 16; ++n) {
      for (int t = 0; t < 100; ++t) {
        Rng rng = stream_rng(505, static_cast<std::uint64_t>(n * 1000 + t));
        const auto [odd, even] = induction_identity_residual(support::random_instance(n, support::Kind::generic, rng));
        worst = std::max({worst, odd, even});
      }
    }
    o.require(worst <= 1e-10, "identity residual above 1e-10");
    double deviation = 0.0;
    for (int n = 1; n <= 12; ++n) deviation = std::max(deviation, fourier_cancellation_check(n, 505));
    o.require(deviation == 0.0, "Fourier cancellation deviation is nonzero");
    o.detail << "max_residual=" << worst << " fourier_deviation=" << deviation;
  });

  run("AC6", "stabilizer dimension formula", 0.0, true, [](Outcome& o) {
    int checks = 0;
    for (int n = 2; n <= 8; ++n) {
      const auto gens = canonical_stabilizer_generators(n);
      for (int k = 1; k <= n; ++k) {
        const std::vector<ProductObservable> first(gens.begin(), gens.begin() + k);
        const long long dim = stabilizer_dimension(first, n);
        o.require(dim == (1LL << (n - k)),
                  "N=" + std::to_string(n) + " k=" + std::to_string(k) + " gave " + std::to_string(dim));
        ++checks;
      }
    }
    o.detail << "checks=" << checks;
  });

  run("AC7", "security property", 0.0, true, [](Outcome& o) {
    double unique_max = 0.0;
    std::vector<DirectionList> unique_cases;
    for (int n = 2; n <= 6; ++n) unique_cases.push_back(canonical_angles(n));
    for (int k = 0; k < 5; ++k) {
      Rng rng = stream_rng(707, static_cast<std::uint64_t>(k));
      unique_cases.push_back(support::random_instance(2 + k, support::Kind::unique, rng));
    }
    for (const auto& d : unique_cases) {
      const PurityReport p = purity_security_check(d, 8, 50, 707);
      o.require(p.projector_dim == 1, "unique instance with projector rank != 1");
      o.require(p.min_fidelity && *p.min_fidelity >= 1.0 - 1e-9, "reduced state differs from the solver state");
      unique_max = std::max(unique_max, p.max_entropy);
    }
    o.require(unique_max <= 1e-8, "case (ii) entropy above 1e-8");
    const PurityReport deg = purity_security_check(support::exact_thetas({{1, 1}, {1, 1}, {0, 1}}), 8, 50, 707);
    o.require(deg.max_entropy > 0.1, "degenerate instance shows no entropy above 0.1");
    o.detail << "unique_max_entropy=" << unique_max << " degenerate_max_entropy=" << deg.max_entropy << " bits";
  });

  run("AC8", "certification statistics", 0.0, true, [](Outcome& o) {
    const DirectionList d = canonical_angles(3);
    CertificationConfig cfg;
    cfg.seed = 808;
    const StabilizerReport s = solve_common_eigenspace(d);
    o.require(s.dimension == 1, "canonical_angles(3) has no unique state");
    const CertReport good = run_certification(s.basis.vector(0), d, cfg);
    o.require(good.pass && good.mean_a == 1.0 && good.mean_b == 1.0, "stabilized state does not pass with unit means");
    const CertReport bad = run_certification(StateVector::basis(3, 0), d, cfg);
    o.require(!bad.pass, "|000> passes");
    const double z = std::abs(bad.mean_a - (-0.125)) / bad.stderr_a;
    o.require(z <= 5.0, "|000> mean_a more than 5 standard errors from -1/8");
    o.detail << "good=(" << good.mean_a << "," << good.mean_b << ") bad_mean_a=" << bad.mean_a << " z=" << z;
  });

  run("AC9", "audit: oracle dimension vs |M| in case (iii)", 0.0, false, [](Outcome& o) {
    std::size_t equal = 0, total = 0, distinct_dims = 0;
    std::vector<std::size_t> seen;
    for (const Instance& in : sample()) {
      if (in.solved.classification.case_tag != CaseTag::Degenerate) continue;
      ++total;
      const std::size_t m = in.solved.classification.m_set.members.size();
      if (in.oracle.count() == m) {
        ++equal;
      } else {
        o.detail << "[N=" << in.d.n_parties() << " oracle=" << in.oracle.count() << " |M|=" << m << "] ";
      }
      if (std::find(seen.begin(), seen.end(), m) == seen.end()) {
        seen.push_back(m);
        ++distinct_dims;
      }
    }
    o.detail << "case_iii=" << total << " oracle_dim==|M| in " << equal << "/" << total
             << " distinct |M| values=" << distinct_dims;
  });

  std::printf("%d gating criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
