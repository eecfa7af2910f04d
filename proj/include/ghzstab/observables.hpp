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

#ifndef GHZSTAB_OBSERVABLES_HPP
#define GHZSTAB_OBSERVABLES_HPP

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghzstab/angle.hpp"
#include "ghzstab/tensor.hpp"

namespace ghz {

// Per-party measurement directions (theta_l, phi_l); index 0 is party 1.
class DirectionList {
 public:
  // Throws ShapeError on length mismatch, DomainError when empty.
  DirectionList(std::vector<Angle> thetas, std::vector<Angle> phis);

  static DirectionList with_zero_phis(std::vector<Angle> thetas);

  int n_parties() const { return static_cast<int>(thetas_.size()); }
  const std::vector<Angle>& thetas() const { return thetas_; }
  const std::vector<Angle>& phis() const { return phis_; }

  bool thetas_exact() const;

 private:
  std::vector<Angle> thetas_;
  std::vector<Angle> phis_;
};

// Tensor product of single-party Hermitian involutions. The 2^N matrix is built
// on first use of full() and shared between copies; apply() never builds it.
class ProductObservable {
 public:
  // Each local must be a Hermitian involution within 1e-10 (DomainError);
  // 2^N above max_dim is a SizeError.
  explicit ProductObservable(std::vector<Mat2> locals, std::size_t max_dim = kMaxDim);

  int n_parties() const { return static_cast<int>(locals_.size()); }
  std::size_t dim() const { return std::size_t{1} << locals_.size(); }
  const std::vector<Mat2>& locals() const { return locals_; }

  const Operator& full() const;

  StateVector apply(const StateVector& v) const;
  double expectation(const StateVector& v) const;

  // -A, realized by negating party 1's factor.
  ProductObservable negated() const;

  // (V_1 (x) ... (x) V_N) A (V_1 (x) ... (x) V_N)^dagger.
  ProductObservable conjugated(std::span<const Mat2> unitaries) const;

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<Operator> full;
  };

  std::vector<Mat2> locals_;
  std::size_t max_dim_;
  std::shared_ptr<Cache> cache_;
};

// [[cos t, e^{-i p} sin t], [e^{i p} sin t, -cos t]].
Mat2 local_matrix(const Angle& theta, const Angle& phi);
Operator local_observable(const Angle& theta, const Angle& phi);

ProductObservable product_observable(const DirectionList& d, std::size_t max_dim = kMaxDim);

ProductObservable sigma_z_product(int n);

// "XZI"-style label, leftmost character is party 1.
ProductObservable pauli_string_observable(std::string_view label);

// Commutation decided symbolically on Pauli labels.
bool pauli_strings_commute(std::string_view a, std::string_view b);

// Labels of the commuting GHZ generator set: X...X followed by Z on party 1
// paired with Z on party k, k = 2..n. Throws DomainError for n < 2.
std::vector<std::string> canonical_stabilizer_labels(int n);
std::vector<ProductObservable> canonical_stabilizer_generators(int n);

// True when AB = BA within tol, decided factor-by-factor without building 2^N matrices.
bool observables_commute(const ProductObservable& a, const ProductObservable& b, double tol = 1e-10);

// Rounded trace of prod_i (I + P_i) / 2^k over n parties. Throws PreconditionError
// unless every pair commutes; the generators are assumed independent.
long long stabilizer_dimension(const std::vector<ProductObservable>& generators, int n);

// (cos(t/2), e^{i p} sin(t/2)), the +1 eigenvector of local_matrix(t, p).
StateVector spin_up_eigenvector(const Angle& theta, const Angle& phi);

// Unit +1 eigenvector of a single-party Hermitian involution.
Eigen::Vector2cd plus_eigenvector(const Mat2& local);

// (theta, phi) in radians of the Bloch direction of a Hermitian involution.
std::pair<double, double> bloch_angles(const Mat2& local);

}  // namespace ghz

#endif  // GHZSTAB_OBSERVABLES_HPP
