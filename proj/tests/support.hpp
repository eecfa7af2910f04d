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

#ifndef GHZSTAB_TESTS_SUPPORT_HPP
#define GHZSTAB_TESTS_SUPPORT_HPP

// Independent reference computations for the tests. Nothing here calls the
// library's kernels or null-space code.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ghzstab/observables.hpp"
#include "ghzstab/rng.hpp"

namespace support {

using ghz::cplx;
using ghz::CMatrix;
using ghz::CVector;

inline constexpr double kPi = std::numbers::pi;

// v.sigma with v = (sin t cos p, sin t sin p, cos t).
inline Eigen::Matrix2cd spin(double theta, double phi) {
  Eigen::Matrix2cd m;
  m << std::cos(theta), std::polar(std::sin(theta), -phi), std::polar(std::sin(theta), phi), -std::cos(theta);
  return m;
}

// Dense Kronecker product with party 1 as the most significant factor.
inline CMatrix dense_product(const std::vector<Eigen::Matrix2cd>& locals) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (const auto& l : locals) {
    CMatrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * l;
    out = std::move(next);
  }
  return out;
}

inline CMatrix dense_a(const ghz::DirectionList& d) {
  std::vector<Eigen::Matrix2cd> locals;
  for (int l = 0; l < d.n_parties(); ++l)
    locals.push_back(spin(d.thetas()[static_cast<std::size_t>(l)].to_radians(),
                          d.phis()[static_cast<std::size_t>(l)].to_radians()));
  return dense_product(locals);
}

inline CMatrix dense_b(int n) {
  Eigen::Matrix2cd z;
  z << 1, 0, 0, -1;
  return dense_product(std::vector<Eigen::Matrix2cd>(static_cast<std::size_t>(n), z));
}

// Orthonormal basis of the common +1 eigenspace of two Hermitian involutions,
// from the eigenvectors of P_a P_b P_a with eigenvalue 1. The gap 1 - lambda is
// quadratic in the distance to a solution, so tol acts on that squared scale.
inline CMatrix common_plus_space(const CMatrix& a, const CMatrix& b, double tol = 1e-8) {
  const auto dim = a.rows();
  const CMatrix id = CMatrix::Identity(dim, dim);
  const CMatrix pa = (id + a) / 2.0, pb = (id + b) / 2.0;
  const CMatrix m = pa * pb * pa;
  Eigen::SelfAdjointEigenSolver<CMatrix> es((m + m.adjoint()) / 2.0);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < dim; ++i)
    if (es.eigenvalues()[i] > 1.0 - tol) keep.push_back(i);
  CMatrix out(dim, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
  return out;
}

// Projector distance ||P_x - P_y||_2 between column spans of orthonormal matrices.
inline double projector_distance(const CMatrix& x, const CMatrix& y) {
  if (x.cols() != y.cols()) return 1.0;
  if (x.cols() == 0) return 0.0;
  const CMatrix d = x * x.adjoint() - y * y.adjoint();
  Eigen::JacobiSVD<CMatrix> svd(d);
  return svd.singularValues()[0];
}

enum class Kind { generic, unique, degenerate };

inline double uniform_angle(ghz::Rng& rng) { return 2.0 * kPi * ghz::uniform01(rng); }

// generic: independent uniform angles. unique: theta_1 chosen so a random m0 has
// zero signed sum. degenerate: as unique with one theta_k (k >= 2) set to 0 or pi.
inline ghz::DirectionList random_instance(int n, Kind kind, ghz::Rng& rng) {
  std::vector<double> th(static_cast<std::size_t>(n)), ph(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    th[static_cast<std::size_t>(l)] = uniform_angle(rng);
    ph[static_cast<std::size_t>(l)] = uniform_angle(rng);
  }
  if (kind != Kind::generic) {
    if (kind == Kind::degenerate && n >= 2) {
      const auto k = 1 + static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n - 1));
      th[k] = (rng() & 1) ? kPi : 0.0;
    }
    double s = 0.0;
    for (int l = 1; l < n; ++l) s += ((rng() & 1) ? -1.0 : 1.0) * th[static_cast<std::size_t>(l)];
    th[0] = std::fmod(-s, 2.0 * kPi);
    if (th[0] < 0) th[0] += 2.0 * kPi;
  }
  std::vector<ghz::Angle> t, p;
  for (int l = 0; l < n; ++l) {
    t.push_back(ghz::Angle::radians(th[static_cast<std::size_t>(l)]));
    p.push_back(ghz::Angle::radians(ph[static_cast<std::size_t>(l)]));
  }
  return ghz::DirectionList(std::move(t), std::move(p));
}

inline ghz::DirectionList exact_thetas(std::vector<std::pair<std::int64_t, std::int64_t>> fracs) {
  std::vector<ghz::Angle> t;
  for (auto [num, den] : fracs) t.push_back(ghz::Angle::pi_fraction(num, den));
  return ghz::DirectionList::with_zero_phis(std::move(t));
}

}  // namespace support

#endif  // GHZSTAB_TESTS_SUPPORT_HPP
