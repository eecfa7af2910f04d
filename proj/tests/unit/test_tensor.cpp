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

#include "ghzstab/errors.hpp"
#include "ghzstab/rng.hpp"
#include "ghzstab/tensor.hpp"
#include "support.hpp"

using namespace ghz;

TEST_CASE("state vector construction and normalization") {
  CHECK_THROWS_AS(StateVector(CVector::Zero(3)), ShapeError);
  CHECK_THROWS_AS(StateVector(CVector::Zero(1)), ShapeError);
  StateVector b = StateVector::basis(3, 5);
  CHECK(b.n_qubits() == 3);
  CHECK(b.dim() == 8);
  CHECK(b[5] == cplx(1.0));
  CHECK_THROWS_AS(StateVector::zero(2).normalized(), DomainError);
  CVector v(2);
  v << 3.0, cplx(0.0, 4.0);
  CHECK(StateVector(v).normalized().norm() == doctest::Approx(1.0));
}

TEST_CASE("operator validation") {
  CHECK_THROWS_AS(Operator(CMatrix::Zero(2, 3)), ShapeError);
  CHECK_THROWS_AS(Operator(CMatrix::Zero(3, 3)), ShapeError);
  CHECK(Operator(pauli::x()).is_hermitian());
  CHECK(Operator(pauli::y()).is_involution());
  CHECK_FALSE(Operator(pauli::hadamard() * pauli::z()).is_hermitian());
  CHECK(Operator::identity(4).is_involution());
}

TEST_CASE("kron matches the block definition") {
  Rng rng = stream_rng(1, 0);
  const CMatrix a = complex_gaussian(2, 2, rng), b = complex_gaussian(2, 2, rng);
  const CMatrix k = kron(a, b);
  CHECK(k.rows() == 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(std::abs(k(2 * i + r, 2 * j + c) - a(i, j) * b(r, c)) < 1e-15);
  CHECK_THROWS_AS(kron(Operator::identity(128), Operator::identity(256)), SizeError);
}

TEST_CASE("null space of a known rank-deficient matrix") {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 2.0;
  const SubspaceBasis ns = null_space(m);
  REQUIRE(ns.count() == 1);
  CHECK(std::abs(std::abs(ns.columns()(2, 0)) - 1.0) < 1e-12);
  CHECK_THROWS_AS(null_space(CMatrix::Zero(2, 3)), ShapeError);

  // Rectangular input: a 4x2 matrix with independent columns has trivial kernel.
  CMatrix r = CMatrix::Zero(4, 2);
  r(0, 0) = 1.0;
  r(3, 1) = 1.0;
  CHECK(null_space_of(r).basis.count() == 0);
  // Relative tolerance: small but nonzero singular values are dropped.
  CMatrix s = CMatrix::Identity(2, 2);
  s(1, 1) = 1e-12;
  CHECK(null_space_of(s, 1e-9).basis.count() == 1);
  CHECK(null_space_of(s, 1e-13).basis.count() == 0);
}

TEST_CASE("subspace basis checks orthonormality") {
  CMatrix cols(2, 2);
  cols << 1, 1, 0, 0;
  CHECK_THROWS_AS(SubspaceBasis(2, cols), DomainError);
  const SubspaceBasis span = SubspaceBasis::span_of(2, cols);
  CHECK(span.count() == 1);
  CHECK(SubspaceBasis::empty(4).is_empty());
}

TEST_CASE("fidelity and subspace distance") {
  const StateVector a = StateVector::basis(1, 0), b = StateVector::basis(1, 1);
  CHECK(fidelity(a, a) == doctest::Approx(1.0));
  CHECK(fidelity(a, b) == doctest::Approx(0.0));
  CVector plus(2);
  plus << 1.0, 1.0;
  CHECK(fidelity(a, StateVector(plus).normalized()) == doctest::Approx(1.0 / std::sqrt(2.0)));

  Rng rng = stream_rng(2, 0);
  const CMatrix g = complex_gaussian(8, 3, rng);
  const SubspaceBasis s1 = SubspaceBasis::span_of(8, g);
  // Same span from a different basis: mix the columns with an invertible matrix.
  const SubspaceBasis s2 = SubspaceBasis::span_of(8, g * complex_gaussian(3, 3, rng));
  CHECK(subspace_distance(s1, s2) < 1e-12);
  CHECK(subspace_distance(s1, SubspaceBasis::span_of(8, g.leftCols(2))) == 1.0);
  CHECK(subspace_distance(SubspaceBasis::empty(8), SubspaceBasis::empty(8)) == 0.0);
  // Distance agrees with the projector-difference norm.
  const SubspaceBasis s3 = SubspaceBasis::span_of(8, complex_gaussian(8, 3, rng));
  CHECK(subspace_distance(s1, s3) ==
        doctest::Approx(support::projector_distance(s1.columns(), s3.columns())).epsilon(1e-9));
}
