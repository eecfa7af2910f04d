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

#include "ghzstab/eigensolver.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "ghzstab/errors.hpp"
#include "ghzstab/rng.hpp"

namespace ghz {
namespace {

constexpr double kResidualLimit = 1e-8;

void check_solver_size(int n) {
  if (n > kMaxSolverParties)
    throw SizeError("the eigenspace solver handles at most " + std::to_string(kMaxSolverParties) + " parties");
}

// Rotates v so its first amplitude above 1e-9 in modulus is real positive.
void fix_global_phase(Eigen::Ref<CVector> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > 1e-9) {
      v *= std::conj(v[i]) / a;
      return;
    }
  }
}

double max_residual(const ProductObservable& a, const ProductObservable& b, const SubspaceBasis& basis) {
  double worst = 0.0;
  for (std::size_t k = 0; k < basis.count(); ++k) {
    const StateVector v = basis.vector(k);
    worst = std::max(worst, (a.apply(v).amplitudes() - v.amplitudes()).norm());
    worst = std::max(worst, (b.apply(v).amplitudes() - v.amplitudes()).norm());
  }
  return worst;
}

double entropy_bits(const Eigen::VectorXd& singular_values) {
  const double total = singular_values.squaredNorm();
  double s = 0.0;
  for (Eigen::Index i = 0; i < singular_values.size(); ++i) {
    const double p = singular_values[i] * singular_values[i] / total;
    if (p > 1e-300) s -= p * std::log2(p);
  }
  return std::max(0.0, s);
}

}  // namespace

CoefficientMatrix coefficient_matrix(const DirectionList& d) {
  check_solver_size(d.n_parties());
  const ProductObservable a = product_observable(d);
  CoefficientMatrix out;
  out.n = d.n_parties();
  out.entries = kernels::parallel::even_parity_block(a.locals());
  out.indices = kernels::even_parity_indices(out.n);
  return out;
}

StabilizerReport solve_common_eigenspace(const DirectionList& d, double tol, std::optional<AngleMode> mode) {
  const int n = d.n_parties();
  check_solver_size(n);
  StabilizerReport report;
  report.classification = classify(d, tol, mode);

  // Null space of (A - I) on even-parity columns: the rows T - I plus the odd-row
  // block. Exactly null(T - I) since A is unitary, but singular values scale
  // linearly with the distance to a solution where those of T - I scale quadratically.
  const CoefficientMatrix t = coefficient_matrix(d);
  const auto half = t.entries.rows();
  CMatrix system = kernels::parallel::even_parity_columns(product_observable(d).locals());
  for (Eigen::Index c = 0; c < half; ++c) system(static_cast<Eigen::Index>(t.indices[static_cast<std::size_t>(c)]), c) -= 1.0;
  // A is unitary, so norm 1 sets the scale even when the system is numerically zero.
  const NullSpace ns = null_space_of(system, tol, 1.0);
  report.smallest_kept = ns.smallest_kept;
  report.largest_dropped = ns.largest_dropped;

  const auto dim = static_cast<std::size_t>(1) << n;
  CMatrix embedded = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(ns.basis.count()));
  for (Eigen::Index k = 0; k < embedded.cols(); ++k) {
    for (Eigen::Index r = 0; r < half; ++r)
      embedded(static_cast<Eigen::Index>(t.indices[static_cast<std::size_t>(r)]), k) = ns.basis.columns()(r, k);
    fix_global_phase(embedded.col(k));
  }
  report.basis = SubspaceBasis(dim, std::move(embedded));
  report.dimension = report.basis.count();

  report.residuals = max_residual(product_observable(d), sigma_z_product(n), report.basis);
  if (report.residuals > kResidualLimit)
    throw ConsistencyError("solver eigenvector residual " + std::to_string(report.residuals) + " exceeds 1e-8");
  return report;
}

SubspaceBasis oracle_eigenspace(const ProductObservable& a, const ProductObservable& b, double tol) {
  require_shape(a.dim() == b.dim(), "oracle observables act on different dimensions");
  const auto dim = static_cast<Eigen::Index>(a.dim());
  CMatrix stacked(2 * dim, dim);
  stacked.topRows(dim) = a.full().matrix() - CMatrix::Identity(dim, dim);
  stacked.bottomRows(dim) = b.full().matrix() - CMatrix::Identity(dim, dim);
  return null_space_of(stacked, tol).basis;
}

std::array<std::size_t, 4> sector_dimensions(const DirectionList& d, double tol, bool cross_check) {
  const ProductObservable a = product_observable(d);
  const ProductObservable b = sigma_z_product(d.n_parties());
  std::array<std::size_t, 4> dims{};
  for (std::size_t s = 0; s < kSectorSigns.size(); ++s) {
    const auto [sa, sb] = kSectorSigns[s];
    const std::size_t solver = solve_common_eigenspace(sector_transform(d, sa, sb), tol).dimension;
    if (!cross_check) {
      dims[s] = solver;
      continue;
    }
    const std::size_t oracle = oracle_eigenspace(sa < 0 ? a.negated() : a, sb < 0 ? b.negated() : b, tol).count();
    if (oracle != solver)
      throw ConsistencyError("sector (" + std::to_string(sa) + "," + std::to_string(sb) + "): oracle dimension " +
                             std::to_string(oracle) + " but solver dimension " + std::to_string(solver));
    dims[s] = oracle;
  }
  return dims;
}

InductionCheck induction_identity(const DirectionList& d, kernels::Exec exec) {
  if (d.n_parties() > kMaxEnumerationBits) throw SizeError("induction identity enumerates at most 24 parties");
  std::vector<kernels::BitFactors> factors;
  Angle total = Angle::pi_fraction(0, 1);
  for (const Angle& t : d.thetas()) {
    // (-1)^{-1/2} is taken as -i.
    factors.push_back({cplx(t.cos(), 0.0), cplx(0.0, -t.sin())});
    total = total + t;
  }
  const auto [even, odd] = exec == kernels::Exec::serial ? kernels::serial::parity_split_sums(factors)
                                                         : kernels::parallel::parity_split_sums(factors);
  InductionCheck out;
  out.even_sum = even;
  out.odd_sum = odd;
  out.even_residual = std::abs(even - cplx(total.cos(), 0.0));
  out.odd_residual = std::abs(odd - cplx(0.0, -total.sin()));
  return out;
}

std::pair<double, double> induction_identity_residual(const DirectionList& d) {
  const InductionCheck c = induction_identity(d);
  return {c.odd_residual, c.even_residual};
}

PurityReport purity_security_check(const DirectionList& d, std::size_t env_dim, int trials, std::uint64_t seed,
                                   double tol) {
  if (env_dim < 1) throw DomainError("environment dimension must be positive");
  if (trials < 1) throw DomainError("purity check needs at least one trial");
  const StabilizerReport solved = solve_common_eigenspace(d, tol);
  PurityReport report;
  report.projector_dim = solved.dimension;
  report.env_dim = env_dim;
  if (solved.dimension == 0) {
    report.empty_projector = true;
    return report;
  }
  if (env_dim < solved.dimension)
    throw DomainError("environment dimension " + std::to_string(env_dim) + " is below the projector rank " +
                      std::to_string(solved.dimension));

  const ProductObservable a = product_observable(d);
  const ProductObservable b = sigma_z_product(d.n_parties());
  const CMatrix& q = solved.basis.columns();
  const auto sys_dim = q.rows();
  const auto env = static_cast<Eigen::Index>(env_dim);

  report.trials = trials;
  report.entropies.assign(static_cast<std::size_t>(trials), 0.0);
  std::vector<double> residuals(static_cast<std::size_t>(trials), 0.0);
  std::vector<double> fidelities(static_cast<std::size_t>(trials), 1.0);

#pragma omp parallel for schedule(dynamic)
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = stream_rng(seed, static_cast<std::uint64_t>(trial));
    // Joint state as a system x environment coefficient matrix: (P (x) I) G.
    CMatrix psi = q * (q.adjoint() * complex_gaussian(sys_dim, env, rng));
    psi /= psi.norm();

    double res = 0.0;
    for (Eigen::Index e = 0; e < env; ++e) {
      CVector col = psi.col(e);
      CVector ac = col, bc = col;
      kernels::serial::apply_product(a.locals(), ac);
      kernels::serial::apply_product(b.locals(), bc);
      res = std::max({res, (ac - col).norm(), (bc - col).norm()});
    }

    Eigen::BDCSVD<CMatrix> svd(psi, Eigen::ComputeThinU);
    const auto t = static_cast<std::size_t>(trial);
    report.entropies[t] = entropy_bits(svd.singularValues());
    residuals[t] = res;
    if (solved.dimension == 1)
      fidelities[t] = std::min(1.0, std::abs(svd.matrixU().col(0).dot(q.col(0))));
  }

  for (int t = 0; t < trials; ++t) {
    const auto i = static_cast<std::size_t>(t);
    report.max_entropy = std::max(report.max_entropy, report.entropies[i]);
    report.max_residual = std::max(report.max_residual, residuals[i]);
  }
  if (solved.dimension == 1) {
    double worst = 1.0;
    for (double f : fidelities) worst = std::min(worst, f);
    report.min_fidelity = worst;
    report.product_form_confirmed = report.max_entropy <= 1e-8 && worst >= 1.0 - 1e-9;
  }
  return report;
}

long long character_sum(std::span<const int> v) {
  const int n = static_cast<int>(v.size());
  if (n < 1 || n > 30) throw SizeError("character_sum: length must lie in [1, 30]");
  long long total = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    long long dot = 0;
    for (int l = 0; l < n; ++l)
      if ((m >> (n - 1 - l)) & 1) dot += v[static_cast<std::size_t>(l)];
    total += (dot & 1) ? -1 : 1;
  }
  return total;
}

double fourier_cancellation_check(int n, std::uint64_t seed, int samples) {
  if (n < 1 || n > 16) throw SizeError("fourier_cancellation_check: n must lie in [1, 16]");
  long long worst = 0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
  for (int s = 0; s < samples; ++s) {
    Rng rng = stream_rng(seed, static_cast<std::uint64_t>(s));
    std::vector<int> v(static_cast<std::size_t>(n));
    bool all_even = true;
    for (int& x : v) {
      x = static_cast<int>(rng() % 3);
      all_even = all_even && (x % 2 == 0);
    }
    const long long expected = all_even ? (1LL << n) : 0;
    worst = std::max(worst, std::llabs(character_sum(v) - expected));
  }
  return static_cast<double>(worst);
}

}  // namespace ghz
