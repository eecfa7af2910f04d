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

#include "ghzstab/errors.hpp"
#include "ghzstab/observables.hpp"
#include "ghzstab/rng.hpp"
#include "support.hpp"

using namespace ghz;

TEST_CASE("local matrix is the spin component along the Bloch direction") {
  Rng rng = stream_rng(20, 0);
  for (int k = 0; k < 50; ++k) {
    const double t = support::uniform_angle(rng), p = support::uniform_angle(rng);
    const Mat2 m = local_matrix(Angle::radians(t), Angle::radians(p));
    CHECK((m - support::spin(t, p)).norm() < 1e-14);
    const Operator op = local_observable(Angle::radians(t), Angle::radians(p));
    CHECK(op.is_hermitian());
    CHECK(op.is_involution());
  }
  CHECK((local_matrix(Angle::pi_fraction(0, 1), Angle::pi_fraction(0, 1)) - pauli::z()).norm() == 0.0);
  CHECK((local_matrix(Angle::pi_fraction(1, 2), Angle::pi_fraction(0, 1)) - pauli::x()).norm() == 0.0);
  CHECK((local_matrix(Angle::pi_fraction(1, 2), Angle::pi_fraction(1, 2)) - pauli::y()).norm() == 0.0);
}

TEST_CASE("direction list validation") {
  CHECK_THROWS_AS(DirectionList({}, {}), DomainError);
  CHECK_THROWS_AS(DirectionList({Angle::radians(0.1)}, {}), ShapeError);
  CHECK(DirectionList::with_zero_phis({Angle::pi_fraction(1, 2)}).thetas_exact());
  CHECK_FALSE(DirectionList::with_zero_phis({Angle::radians(0.5)}).thetas_exact());
}

TEST_CASE("product observable matches the dense product and rejects bad factors") {
  Rng rng = stream_rng(21, 0);
  const DirectionList d = support::random_instance(5, support::Kind::generic, rng);
  const ProductObservable a = product_observable(d);
  CHECK((a.full().matrix() - support::dense_a(d)).norm() < 1e-12);
  const StateVector v = StateVector(complex_gaussian(32, 1, rng)).normalized();
  CHECK((a.apply(v).amplitudes() - support::dense_a(d) * v.amplitudes()).norm() < 1e-12);
  CHECK(a.expectation(v) == doctest::Approx((v.amplitudes().adjoint() * support::dense_a(d) * v.amplitudes())(0, 0).real()));
  CHECK((a.negated().full().matrix() + a.full().matrix()).norm() < 1e-12);
  CHECK((sigma_z_product(5).full().matrix() - support::dense_b(5)).norm() == 0.0);
  CHECK_THROWS_AS(ProductObservable({pauli::hadamard() * pauli::x()}), DomainError);
  CHECK_THROWS_AS(product_observable(support::random_instance(15, support::Kind::generic, rng)).full(), SizeError);
}

TEST_CASE("conjugation by local unitaries") {
  Rng rng = stream_rng(22, 0);
  const DirectionList d = support::random_instance(3, support::Kind::generic, rng);
  std::vector<Mat2> us;
  for (int l = 0; l < 3; ++l) us.push_back(random_unitary2(rng));
  const ProductObservable c = product_observable(d).conjugated(us);
  const CMatrix u = support::dense_product({us.begin(), us.end()});
  CHECK((c.full().matrix() - u * support::dense_a(d) * u.adjoint()).norm() < 1e-12);
}

TEST_CASE("Pauli strings and the canonical GHZ stabilizer generators") {
  CHECK(pauli_strings_commute("XX", "ZZ"));
  CHECK_FALSE(pauli_strings_commute("XI", "ZI"));
  CHECK(pauli_strings_commute("XYZ", "XYZ"));
  CHECK_THROWS_AS(pauli_string_observable("XQ"), DomainError);
  CHECK(canonical_stabilizer_labels(3) == std::vector<std::string>{"XXX", "ZZI", "ZIZ"});
  CHECK_THROWS_AS(canonical_stabilizer_labels(1), DomainError);

  const auto gens = canonical_stabilizer_generators(4);
  for (const auto& g : gens)
    for (const auto& h : gens) CHECK(observables_commute(g, h));
  CHECK_FALSE(observables_commute(pauli_string_observable("XI"), pauli_string_observable("ZI")));
  CHECK_THROWS_AS(stabilizer_dimension({pauli_string_observable("XI"), pauli_string_observable("ZI")}, 2),
                  PreconditionError);
}

TEST_CASE("stabilizer dimension of a single generator is half the space") {
  for (int n = 1; n <= 6; ++n) {
    std::string label(static_cast<std::size_t>(n), 'X');
    CHECK(stabilizer_dimension({pauli_string_observable(label)}, n) == (1LL << (n - 1)));
  }
}

TEST_CASE("eigenvector helpers") {
  Rng rng = stream_rng(23, 0);
  for (int k = 0; k < 50; ++k) {
    const double t = support::uniform_angle(rng) / 2.0, p = support::uniform_angle(rng);
    const Mat2 m = support::spin(t, p);
    const StateVector up = spin_up_eigenvector(Angle::radians(t), Angle::radians(p));
    CHECK((m * up.amplitudes() - up.amplitudes()).norm() < 1e-12);
    const Eigen::Vector2cd pe = plus_eigenvector(m);
    CHECK((m * pe - pe).norm() < 1e-12);
    const auto [bt, bp] = bloch_angles(m);
    CHECK((support::spin(bt, bp) - m).norm() < 1e-12);
  }
  const StateVector ex = spin_up_eigenvector(Angle::pi_fraction(1, 1), Angle::pi_fraction(0, 1));
  CHECK(std::abs(ex[0]) == 0.0);
}
