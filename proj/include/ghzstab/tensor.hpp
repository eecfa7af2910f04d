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

#ifndef GHZSTAB_TENSOR_HPP
#define GHZSTAB_TENSOR_HPP

// Dense complex linear algebra on 2^N-dimensional qubit spaces.
//
// Index convention: for an N-qubit basis index x, party l (1-based) owns bit
// N - l, so party 1 is the most significant bit and the leftmost character of
// a "0101"-style label. kron(a, b) gives a the most significant index block.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace ghz {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Mat2 = Eigen::Matrix2cd;

inline constexpr std::size_t kMaxDim = std::size_t{1} << 14;
inline constexpr double kDefaultTol = 1e-9;

bool is_power_of_two(std::size_t x);

// Number of qubits for a power-of-two dimension.
int qubits_for_dim(std::size_t dim);

class StateVector {
 public:
  // amplitudes.size() must be a power of two >= 2.
  explicit StateVector(CVector amplitudes);

  static StateVector basis(int n_qubits, std::uint64_t index);
  static StateVector zero(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const CVector& amplitudes() const { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

  double norm() const { return amps_.norm(); }

  // Scales to unit norm. Throws DomainError on a zero vector.
  void normalize();
  StateVector normalized() const;

 private:
  int n_qubits_;
  CVector amps_;
};

class Operator {
 public:
  // Square, power-of-two dimension, at most max_dim.
  explicit Operator(CMatrix entries, std::size_t max_dim = kMaxDim);

  static Operator identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  cplx operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  bool is_hermitian(double tol = 1e-12) const;
  bool is_involution(double tol = 1e-10) const;

  StateVector apply(const StateVector& v) const;

  friend Operator operator*(const Operator& a, const Operator& b);

 private:
  CMatrix m_;
};

namespace pauli {
Mat2 i2();
Mat2 x();
Mat2 y();
Mat2 z();
Mat2 hadamard();
}  // namespace pauli

// Orthonormal spanning set of a subspace, stored as the columns of a matrix.
class SubspaceBasis {
 public:
  // Columns must be orthonormal within 1e-10 (DomainError otherwise).
  SubspaceBasis(std::size_t ambient_dim, CMatrix columns);

  static SubspaceBasis empty(std::size_t ambient_dim);

  // Orthonormal basis for the span of arbitrary columns; directions with
  // singular value below tol * largest are discarded.
  static SubspaceBasis span_of(std::size_t ambient_dim, const CMatrix& columns,
                               double tol = kDefaultTol);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t count() const { return static_cast<std::size_t>(cols_.cols()); }
  bool is_empty() const { return count() == 0; }
  const CMatrix& columns() const { return cols_; }
  StateVector vector(std::size_t i) const;

  CMatrix projector() const;

 private:
  std::size_t ambient_;
  CMatrix cols_;
};

// Null space plus the singular values on either side of the rank cut.
struct NullSpace {
  SubspaceBasis basis;
  std::size_t rank = 0;
  double largest_singular_value = 0.0;
  // Smallest singular value counted as nonzero (0 if rank == 0).
  double smallest_kept = 0.0;
  // Largest singular value counted as zero (0 if none was dropped).
  double largest_dropped = 0.0;
};

Operator kron(const Operator& a, const Operator& b, std::size_t max_dim = kMaxDim);
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Vectors v with singular-value weight below tol * max(largest singular value, scale).
// scale is a floor for matrices that are numerically zero, e.g. T - I with T
// unitary (scale 1). Accepts rectangular input; columns of m index the ambient space.
NullSpace null_space_of(const CMatrix& m, double tol = kDefaultTol, double scale = 0.0);

SubspaceBasis null_space(const Operator& m, double tol = kDefaultTol);

// Throws ShapeError for non-square input.
SubspaceBasis null_space(const CMatrix& m, double tol = kDefaultTol);

// |<u|v>|, clamped to [0, 1].
double fidelity(const StateVector& u, const StateVector& v);

// Operator-norm distance between the orthogonal projectors onto a and b.
double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace ghz

#endif  // GHZSTAB_TENSOR_HPP
