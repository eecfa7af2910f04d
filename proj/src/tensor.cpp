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

#include "ghzstab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ghzstab/errors.hpp"

namespace ghz {

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

int qubits_for_dim(std::size_t dim) {
  if (!is_power_of_two(dim)) throw ShapeError("dimension " + std::to_string(dim) + " is not a power of two");
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

StateVector::StateVector(CVector amplitudes) : amps_(std::move(amplitudes)) {
  const auto d = static_cast<std::size_t>(amps_.size());
  if (d < 2 || !is_power_of_two(d))
    throw ShapeError("state length " + std::to_string(d) + " is not a power of two >= 2");
  n_qubits_ = qubits_for_dim(d);
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s = zero(n_qubits);
  if (index >= s.dim()) throw DomainError("basis index out of range");
  s.amps_[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector StateVector::zero(int n_qubits) {
  if (n_qubits < 1 || (std::size_t{1} << n_qubits) > kMaxDim)
    throw SizeError("qubit count " + std::to_string(n_qubits) + " outside [1, 14]");
  return StateVector(CVector::Zero(Eigen::Index{1} << n_qubits));
}

void StateVector::normalize() {
  const double nrm = amps_.norm();
  if (nrm == 0.0) throw DomainError("cannot normalize the zero vector");
  amps_ /= nrm;
}

StateVector StateVector::normalized() const {
  StateVector s = *this;
  s.normalize();
  return s;
}

Operator::Operator(CMatrix entries, std::size_t max_dim) : m_(std::move(entries)) {
  require_shape(m_.rows() == m_.cols(), "operator must be square");
  const auto d = static_cast<std::size_t>(m_.rows());
  require_shape(is_power_of_two(d), "operator dimension must be a power of two");
  if (d > max_dim) throw SizeError("operator dimension " + std::to_string(d) + " exceeds cap " + std::to_string(max_dim));
}

Operator Operator::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return Operator(CMatrix::Identity(d, d));
}

bool Operator::is_hermitian(double tol) const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol; }

bool Operator::is_involution(double tol) const {
  const CMatrix sq = m_ * m_;
  return (sq - CMatrix::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff() <= tol;
}

StateVector Operator::apply(const StateVector& v) const {
  require_shape(v.dim() == dim(), "operator/state dimension mismatch");
  return StateVector(m_ * v.amplitudes());
}

Operator operator*(const Operator& a, const Operator& b) {
  require_shape(a.dim() == b.dim(), "operator product dimension mismatch");
  return Operator(a.m_ * b.m_);
}

namespace pauli {
Mat2 i2() { return Mat2::Identity(); }
Mat2 x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}
Mat2 y() {
  Mat2 m;
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}
Mat2 z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}
Mat2 hadamard() {
  Mat2 m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}
}  // namespace pauli

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, CMatrix columns)
    : ambient_(ambient_dim), cols_(std::move(columns)) {
  require_shape(static_cast<std::size_t>(cols_.rows()) == ambient_, "basis vectors have the wrong length");
  if (cols_.cols() > 0) {
    const CMatrix gram = cols_.adjoint() * cols_;
    const double dev = (gram - CMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    if (dev > 1e-10) throw DomainError("basis vectors are not orthonormal (Gram deviation " + std::to_string(dev) + ")");
  }
}

SubspaceBasis SubspaceBasis::empty(std::size_t ambient_dim) {
  return SubspaceBasis(ambient_dim, CMatrix(static_cast<Eigen::Index>(ambient_dim), 0));
}

SubspaceBasis SubspaceBasis::span_of(std::size_t ambient_dim, const CMatrix& columns, double tol) {
  require_shape(static_cast<std::size_t>(columns.rows()) == ambient_dim, "spanning vectors have the wrong length");
  if (columns.cols() == 0) return empty(ambient_dim);
  Eigen::BDCSVD<CMatrix> svd(columns, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cut = tol * (sv.size() > 0 ? sv(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  return SubspaceBasis(ambient_dim, svd.matrixU().leftCols(rank));
}

StateVector SubspaceBasis::vector(std::size_t i) const {
  if (i >= count()) throw DomainError("basis vector index out of range");
  return StateVector(cols_.col(static_cast<Eigen::Index>(i)));
}

CMatrix SubspaceBasis::projector() const { return cols_ * cols_.adjoint(); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Operator kron(const Operator& a, const Operator& b, std::size_t max_dim) {
  if (a.dim() > max_dim / b.dim())
    throw SizeError("kron dimension " + std::to_string(a.dim()) + "x" + std::to_string(b.dim()) +
                    " exceeds cap " + std::to_string(max_dim));
  return Operator(kron(a.matrix(), b.matrix()), max_dim);
}

NullSpace null_space_of(const CMatrix& m, double tol, double scale) {
  const auto ambient = static_cast<std::size_t>(m.cols());
  NullSpace out{SubspaceBasis::empty(ambient)};
  if (m.cols() == 0) return out;
  if (m.rows() == 0) {
    out.basis = SubspaceBasis(ambient, CMatrix::Identity(m.cols(), m.cols()));
    return out;
  }
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv(0);
  const double cut = tol * std::max(top, scale);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  out.rank = static_cast<std::size_t>(rank);
  out.largest_singular_value = top;
  out.smallest_kept = rank > 0 ? sv(rank - 1) : 0.0;
  out.largest_dropped = rank < sv.size() ? sv(rank) : 0.0;
  out.basis = SubspaceBasis(ambient, svd.matrixV().rightCols(m.cols() - rank));
  return out;
}

SubspaceBasis null_space(const Operator& m, double tol) { return null_space_of(m.matrix(), tol).basis; }

SubspaceBasis null_space(const CMatrix& m, double tol) {
  require_shape(m.rows() == m.cols(), "null_space expects a square matrix");
  return null_space_of(m, tol).basis;
}

double fidelity(const StateVector& u, const StateVector& v) {
  require_shape(u.dim() == v.dim(), "fidelity of states with different dimensions");
  const double f = std::abs(u.amplitudes().dot(v.amplitudes()));
  return std::clamp(f, 0.0, 1.0);
}

double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b) {
  require_shape(a.ambient_dim() == b.ambient_dim(), "subspaces live in different ambient spaces");
  if (a.count() != b.count()) return 1.0;
  if (a.is_empty()) return 0.0;
  // Equal dimensions: ||P_a - P_b|| = sine of the largest principal angle = ||(I - P_a) B||.
  const CMatrix& qa = a.columns();
  const CMatrix& qb = b.columns();
  const CMatrix residual = qb - qa * (qa.adjoint() * qb);
  Eigen::BDCSVD<CMatrix> svd(residual);
  return std::min(1.0, svd.singularValues()(0));
}

}  // namespace ghz
