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

#include "ghzstab/ghz.hpp"

#include <bit>
#include <cmath>

#include "ghzstab/eigensolver.hpp"
#include "ghzstab/errors.hpp"
#include "ghzstab/kernels.hpp"

namespace ghz {

StateVector canonical_ghz(int n) {
  StateVector s = StateVector::zero(n);
  CVector amps = s.amplitudes();
  amps[0] = amps[amps.size() - 1] = 1.0 / std::sqrt(2.0);
  return StateVector(std::move(amps));
}

GHZSpec::GHZSpec(std::vector<Mat2> local_unitaries) : unitaries_(std::move(local_unitaries)) {
  if (unitaries_.size() < 2) throw DomainError("a GHZ spec needs at least two parties");
  for (const Mat2& u : unitaries_)
    if ((u * u.adjoint() - Mat2::Identity()).cwiseAbs().maxCoeff() > 1e-12)
      throw DomainError("local operator is not unitary");
}

GHZSpec GHZSpec::canonical(int n) {
  return GHZSpec(std::vector<Mat2>(static_cast<std::size_t>(std::max(n, 0)), Mat2::Identity()));
}

StateVector GHZSpec::to_state() const {
  CVector amps = canonical_ghz(n()).amplitudes();
  kernels::parallel::apply_product(unitaries_, amps);
  return StateVector(std::move(amps));
}

Mat2 single_party_reduced_state(const StateVector& s, int l) {
  const int n = s.n_qubits();
  if (l < 1 || l > n) throw DomainError("party index out of range");
  const std::uint64_t stride = std::uint64_t{1} << (n - l);
  Mat2 rho = Mat2::Zero();
  for (std::uint64_t x = 0; x < s.dim(); ++x) {
    if (x & stride) continue;
    const cplx a0 = s[x], a1 = s[x | stride];
    rho(0, 0) += a0 * std::conj(a0);
    rho(0, 1) += a0 * std::conj(a1);
    rho(1, 0) += a1 * std::conj(a0);
    rho(1, 1) += a1 * std::conj(a1);
  }
  return rho;
}

DirectionList canonical_angles(int n) {
  if (n < 2) throw DomainError("canonical_angles needs n >= 2");
  std::vector<Angle> thetas;
  if (n % 2 == 1) {
    thetas.assign(static_cast<std::size_t>(n), Angle::pi_fraction(2, n));
  } else {
    thetas.assign(static_cast<std::size_t>(n), Angle::pi_fraction(2, n + 1));
    thetas[0] = Angle::pi_fraction(4, n + 1);
  }
  return DirectionList::with_zero_phis(std::move(thetas));
}

cplx phase_beta(const BitString& j, std::span<const Angle> phis) {
  require_shape(static_cast<std::size_t>(j.size()) == phis.size(), "phase_beta: length mismatch");
  cplx p = 1.0;
  for (int l = 1; l <= j.size(); ++l) {
    if (!j.party(l)) continue;
    const Angle& phi = phis[static_cast<std::size_t>(l - 1)];
    p *= cplx(0.0, 1.0) * cplx(phi.cos(), phi.sin());
  }
  return p;
}

Mat2 TildeBasis::frame(int l) const {
  if (l < 1 || l > n()) throw DomainError("party index out of range");
  Mat2 f = Mat2::Zero();
  f(0, 0) = 1.0;
  f(1, 1) = one_phases[static_cast<std::size_t>(l - 1)];
  return f;
}

TildeBasis tilde_basis(const DirectionList& d, const BitString& m) {
  require_shape(m.size() == d.n_parties(), "tilde_basis: length mismatch");
  TildeBasis t;
  for (int l = 1; l <= d.n_parties(); ++l) {
    const Angle& phi = d.phis()[static_cast<std::size_t>(l - 1)];
    const double sign = m.party(l) ? -1.0 : 1.0;
    t.one_phases.push_back(cplx(0.0, sign) * cplx(phi.cos(), phi.sin()));
  }
  return t;
}

StateVector tilde_state(const DirectionList& d, const BitString& m) {
  if (m.party(1) != 0) throw PreconditionError("tilde_state expects m_1 = 0");
  const TildeBasis t = tilde_basis(d, m);
  const int n = d.n_parties();
  CVector amps = CVector::Zero(Eigen::Index{1} << n);
  for (std::uint64_t j : kernels::even_parity_indices(n)) {
    cplx a = 1.0;
    for (int l = 1; l <= n; ++l)
      if ((j >> (n - l)) & 1) a *= t.one_phases[static_cast<std::size_t>(l - 1)];
    amps[static_cast<Eigen::Index>(j)] = a;
  }
  StateVector s(std::move(amps));
  s.normalize();
  return s;
}

StabilizingPair stabilizing_pair_for(const GHZSpec& spec, double tol) {
  const int n = spec.n();
  DirectionList base = canonical_angles(n);
  const ClassificationReport cls = classify(base, tol, AngleMode::exact);
  if (cls.case_tag != CaseTag::UniqueGHZ)
    throw ConsistencyError("canonical angles for n = " + std::to_string(n) + " did not classify as UniqueGHZ");
  const BitString m = cls.m_set.members.front();
  const TildeBasis tb = tilde_basis(base, m);

  // (x)(T_l H) maps canonical_ghz onto tilde_state(base, m), so V_l = U_l (T_l H)^dagger
  // carries the base state onto the target.
  std::vector<Mat2> frames;
  frames.reserve(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) {
    const Mat2 w = tb.frame(l) * pauli::hadamard();
    frames.push_back(spec.local_unitaries()[static_cast<std::size_t>(l - 1)] * w.adjoint());
  }

  ProductObservable a = product_observable(base).conjugated(frames);
  ProductObservable b = sigma_z_product(n).conjugated(frames);
  StateVector target = spec.to_state();

  const double res = std::max((a.apply(target).amplitudes() - target.amplitudes()).norm(),
                              (b.apply(target).amplitudes() - target.amplitudes()).norm());
  if (res > 1e-9) throw ConsistencyError("stabilizing pair residual " + std::to_string(res) + " exceeds 1e-9");
  const std::size_t dim = oracle_eigenspace(a, b, tol).count();
  if (dim != 1) throw ConsistencyError("stabilizing pair has oracle eigenspace dimension " + std::to_string(dim));

  return StabilizingPair{std::move(a), std::move(b), std::move(target), std::move(base), m, std::move(frames), dim, res};
}

CaseIIIBasis case_iii_ghz_basis(const DirectionList& d, double tol) {
  const ClassificationReport cls = classify(d, tol);
  if (cls.case_tag != CaseTag::Degenerate) throw PreconditionError("case_iii_ghz_basis expects a Degenerate instance");
  CaseIIIBasis out;
  out.members = cls.m_set.members;
  const auto dim = std::size_t{1} << d.n_parties();
  CMatrix cols(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(out.members.size()));
  for (std::size_t k = 0; k < out.members.size(); ++k) {
    out.candidates.push_back(tilde_state(d, out.members[k]));
    cols.col(static_cast<Eigen::Index>(k)) = out.candidates.back().amplitudes();
  }
  const SubspaceBasis oracle = oracle_eigenspace(product_observable(d), sigma_z_product(d.n_parties()), tol);
  out.oracle_dimension = oracle.count();
  out.audit_distance = subspace_distance(SubspaceBasis::span_of(dim, cols, tol), oracle);
  return out;
}

}  // namespace ghz
