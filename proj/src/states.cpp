// Copyright 2026 The gcelab Authors
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

#include "gcelab/states.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace gcelab {

PureState ghz_state(int num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("GHZ state needs n >= 1");
  const auto dim = Eigen::Index{1} << num_qubits;
  CVector v = CVector::Zero(dim);
  v[0] = v[dim - 1] = 1.0 / std::sqrt(2.0);
  return PureState::normalized(num_qubits, std::move(v));
}

PureState w_state(int num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("W state needs n >= 1");
  const auto dim = Eigen::Index{1} << num_qubits;
  CVector v = CVector::Zero(dim);
  for (int q = 0; q < num_qubits; ++q) {
    v[Eigen::Index{1} << q] = 1.0;
  }
  return PureState::normalized(num_qubits, std::move(v));
}

PureState product_state(std::span<const Eigen::Vector2cd> factors) {
  if (factors.empty()) throw std::invalid_argument("product state needs at least one factor");
  CVector v = CVector::Constant(1, cplx(1.0, 0.0));
  for (const auto& f : factors) {
    const double norm = f.norm();
    if (!(norm > 0.0)) throw std::invalid_argument("zero single-qubit factor");
    const Eigen::Vector2cd u = f / norm;
    CVector next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next[2 * i] = v[i] * u[0];
      next[2 * i + 1] = v[i] * u[1];
    }
    v = std::move(next);
  }
  return PureState::normalized(static_cast<int>(factors.size()), std::move(v));
}

PureState random_product_state(int num_qubits, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Eigen::Vector2cd> factors;
  for (int q = 0; q < num_qubits; ++q) {
    factors.emplace_back(haar_random_state(1, rng).amplitudes());
  }
  return product_state(factors);
}

PureState spin_squeezed_state(int num_qubits, double mu) {
  if (num_qubits < 1) throw std::invalid_argument("spin-squeezed state needs n >= 1");
  const auto dim = Eigen::Index{1} << num_qubits;
  const double n = num_qubits;
  const double scale = std::pow(2.0, -n / 2.0);
  CVector v(dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const double k = std::popcount(static_cast<std::uint64_t>(x));
    const double d = n / 2.0 - k;
    v[x] = std::polar(scale, -d * d * mu / 2.0);
  }
  return PureState::normalized(num_qubits, std::move(v));
}

}  // namespace gcelab
