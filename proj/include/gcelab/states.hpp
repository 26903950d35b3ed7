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

#ifndef GCELAB_STATES_HPP
#define GCELAB_STATES_HPP

#include <cstdint>
#include <span>

#include "gcelab/quantum_core.hpp"

namespace gcelab {

/// (|0...0> + |1...1>)/sqrt(2).
PureState ghz_state(int num_qubits);

/// Uniform superposition of the n weight-one basis states.
PureState w_state(int num_qubits);

/// Tensor product of single-qubit states; factor i lands on qubit i.
/// Each factor is normalized.
PureState product_state(std::span<const Eigen::Vector2cd> factors);

/// Product of n independent Haar-random single-qubit states.
PureState random_product_state(int num_qubits, std::uint64_t seed);

/// One-axis-twisted coherent spin state
///   2^{-n/2} sum_k sqrt(C(n,k)) exp(-i (n/2 - k)^2 mu / 2) |D(n,k)>,
/// expanded in the computational basis.
PureState spin_squeezed_state(int num_qubits, double mu);

}  // namespace gcelab

#endif  // GCELAB_STATES_HPP
