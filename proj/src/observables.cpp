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

#include "ghzstab/observables.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "ghzstab/errors.hpp"
#include "ghzstab/kernels.hpp"

namespace ghz {
namespace {

// Scalar c with x == c * y, if one exists within tol.
std::optional<cplx> proportionality(const Mat2& x, const Mat2& y, double tol) {
  Eigen::Index r = 0, c = 0;
  y.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(y(r, c)) <= tol) return std::nullopt;
  const cplx k = x(r, c) / y(r, c);
  if ((x - k * y).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  return k;
}

}  // namespace

DirectionList::DirectionList(std::vector<Angle> thetas, std::vector<Angle> phis)
    : thetas_(std::move(thetas)), phis_(std::move(phis)) {
  require_shape(thetas_.size() == phis_.size(), "theta and phi lists differ in length");
  if (thetas_.empty()) throw DomainError("direction list needs at least one party");
}

DirectionList DirectionList::with_zero_phis(std::vector<Angle> thetas) {
  std::vector<Angle> phis(thetas.size(), Angle::pi_fraction(0, 1));
  return DirectionList(std::move(thetas), std::move(phis));
}

bool DirectionList::thetas_exact() const {
  return std::all_of(thetas_.begin(), thetas_.end(), [](const Angle& a) { return a.is_exact(); });
}

ProductObservable::ProductObservable(std::vector<Mat2> locals, std::size_t max_dim)
    : locals_(std::move(locals)), max_dim_(max_dim), cache_(std::make_shared<Cache>()) {
  if (locals_.empty()) throw DomainError("product observable needs at least one party");
  if (locals_.size() >= 63 || (std::size_t{1} << locals_.size()) > max_dim)
    throw SizeError("2^" + std::to_string(locals_.size()) + " exceeds dimension cap " + std::to_string(max_dim));
  for (const Mat2& m : locals_) {
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    const double invo = (m * m - Mat2::Identity()).cwiseAbs().maxCoeff();
    if (herm > 1e-10 || invo > 1e-10) throw DomainError("local factor is not a Hermitian involution");
  }
}

const Operator& ProductObservable::full() const {
  std::call_once(cache_->once, [this] {
    cache_->full = std::make_unique<Operator>(kernels::parallel::materialize_product(locals_), max_dim_);
  });
  return *cache_->full;
}

StateVector ProductObservable::apply(const StateVector& v) const {
  require_shape(v.dim() == dim(), "observable/state dimension mismatch");
  CVector out = v.amplitudes();
  kernels::parallel::apply_product(locals_, out);
  return StateVector(std::move(out));
}

double ProductObservable::expectation(const StateVector& v) const {
  return v.amplitudes().dot(apply(v).amplitudes()).real();
}

ProductObservable ProductObservable::negated() const {
  std::vector<Mat2> l = locals_;
  l[0] = -l[0];
  return ProductObservable(std::move(l), max_dim_);
}

ProductObservable ProductObservable::conjugated(std::span<const Mat2> unitaries) const {
  require_shape(unitaries.size() == locals_.size(), "one unitary per party expected");
  std::vector<Mat2> l(locals_.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    const Mat2 c = unitaries[i] * locals_[i] * unitaries[i].adjoint();
    l[i] = 0.5 * (c + c.adjoint());  // strip roundoff anti-Hermitian part
  }
  return ProductObservable(std::move(l), max_dim_);
}

Mat2 local_matrix(const Angle& theta, const Angle& phi) {
  const double c = theta.cos(), s = theta.sin();
  const cplx e(phi.cos(), phi.sin());
  Mat2 m;
  m << c, std::conj(e) * s, e * s, -c;
  return m;
}

Operator local_observable(const Angle& theta, const Angle& phi) { return Operator(local_matrix(theta, phi)); }

ProductObservable product_observable(const DirectionList& d, std::size_t max_dim) {
  std::vector<Mat2> locals;
  locals.reserve(static_cast<std::size_t>(d.n_parties()));
  for (int l = 0; l < d.n_parties(); ++l) locals.push_back(local_matrix(d.thetas()[l], d.phis()[l]));
  return ProductObservable(std::move(locals), max_dim);
}

ProductObservable sigma_z_product(int n) {
  if (n < 1) throw DomainError("sigma_z_product needs n >= 1");
  return ProductObservable(std::vector<Mat2>(static_cast<std::size_t>(n), pauli::z()));
}

ProductObservable pauli_string_observable(std::string_view label) {
  std::vector<Mat2> locals;
  for (char ch : label) {
    switch (ch) {
      case 'I': locals.push_back(pauli::i2()); break;
      case 'X': locals.push_back(pauli::x()); break;
      case 'Y': locals.push_back(pauli::y()); break;
      case 'Z': locals.push_back(pauli::z()); break;
      default: throw DomainError(std::string("bad Pauli label character '") + ch + "'");
    }
  }
  return ProductObservable(std::move(locals));
}

bool pauli_strings_commute(std::string_view a, std::string_view b) {
  require_shape(a.size() == b.size(), "Pauli labels differ in length");
  int anti = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 'I' && b[i] != 'I' && a[i] != b[i]) ++anti;
  return anti % 2 == 0;
}

std::vector<std::string> canonical_stabilizer_labels(int n) {
  if (n < 2) throw DomainError("canonical stabilizer generators need n >= 2");
  std::vector<std::string> out;
  out.emplace_back(static_cast<std::size_t>(n), 'X');
  for (int k = 1; k < n; ++k) {
    std::string z(static_cast<std::size_t>(n), 'I');
    z[0] = 'Z';
    z[static_cast<std::size_t>(k)] = 'Z';
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<ProductObservable> canonical_stabilizer_generators(int n) {
  std::vector<ProductObservable> out;
  for (const auto& label : canonical_stabilizer_labels(n)) out.push_back(pauli_string_observable(label));
  return out;
}

bool observables_commute(const ProductObservable& a, const ProductObservable& b, double tol) {
  require_shape(a.n_parties() == b.n_parties(), "observables act on different party counts");
  // AB = (x) A_l B_l and BA = (x) B_l A_l agree iff factors are proportional
  // with scales multiplying to one.
  cplx scale = 1.0;
  for (int l = 0; l < a.n_parties(); ++l) {
    const Mat2 ab = a.locals()[l] * b.locals()[l];
    const Mat2 ba = b.locals()[l] * a.locals()[l];
    const auto k = proportionality(ab, ba, tol);
    if (!k) return false;
    scale *= *k;
  }
  return std::abs(scale - 1.0) <= tol;
}

long long stabilizer_dimension(const std::vector<ProductObservable>& generators, int n) {
  if (n < 1 || (std::size_t{1} << n) > kMaxDim) throw SizeError("stabilizer_dimension: n out of range");
  for (const auto& g : generators) require_shape(g.n_parties() == n, "generator party count mismatch");
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!observables_commute(generators[i], generators[j]))
        throw PreconditionError("generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");

  const std::int64_t dim = std::int64_t{1} << n;
  double trace = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : trace) if (dim >= 64)
  for (std::int64_t x = 0; x < dim; ++x) {
    CVector v = CVector::Zero(dim);
    v[x] = 1.0;
    for (const auto& g : generators) {
      CVector pv = v;
      kernels::serial::apply_product(g.locals(), pv);
      v = 0.5 * (v + pv);
    }
    trace += v[x].real();
  }
  return std::llround(trace);
}

StateVector spin_up_eigenvector(const Angle& theta, const Angle& phi) {
  const Angle half = theta.is_exact()
                         ? Angle::pi_fraction(theta.exact().num, 2 * theta.exact().den)
                         : Angle::radians(0.5 * theta.to_radians());
  CVector v(2);
  v << half.cos(), cplx(phi.cos(), phi.sin()) * half.sin();
  return StateVector(std::move(v));
}

Eigen::Vector2cd plus_eigenvector(const Mat2& local) {
  const Mat2 proj = 0.5 * (Mat2::Identity() + local);
  const Eigen::Index col = proj.col(0).norm() >= proj.col(1).norm() ? 0 : 1;
  return proj.col(col).normalized();
}

std::pair<double, double> bloch_angles(const Mat2& local) {
  const double nx = 0.5 * (local * pauli::x()).trace().real();
  const double ny = 0.5 * (local * pauli::y()).trace().real();
  const double nz = 0.5 * (local * pauli::z()).trace().real();
  const double theta = std::acos(std::clamp(nz, -1.0, 1.0));
  const double phi = (std::abs(nx) + std::abs(ny) < 1e-15) ? 0.0 : std::atan2(ny, nx);
  return {theta, phi};
}

}  // namespace ghz
