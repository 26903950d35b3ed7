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

// Probabilistic W-state concentration with a single K = 3 permutation test.
//
// Three single-qubit states (a_k|0> + b_k|1>) are fed to one test. Outcome z
// applies (1/3) sum_m conj(w)^{z m} D^(m). For z = 1 the unnormalized
// post-state is
//
//   (1/3) [M (|100> + w|010> + w^2|001>) + N (|011> + w|101> + w^2|110>)]
//
// with M = b1 a2 a3 + conj(w) a1 b2 a3 + conj(w)^2 a1 a2 b3 and
// N = a1 b2 b3 + conj(w) b1 a2 b3 + conj(w)^2 b1 b2 a3; outcome 2 is the same
// with w and conj(w) exchanged. Local gates U(theta, phi_k, lambda) then map
// it onto |W>.

#ifndef GCELAB_CONCENTRATION_HPP
#define GCELAB_CONCENTRATION_HPP

#include <array>
#include <optional>
#include <vector>

#include "gcelab/quantum_core.hpp"

namespace gcelab {

struct ConcentrationInput {
  /// Throws std::invalid_argument unless every pair has unit norm.
  explicit ConcentrationInput(std::array<Eigen::Vector2cd, 3> qubits);

  static ConcentrationInput random(Rng& rng);

  const std::array<Eigen::Vector2cd, 3>& qubits() const noexcept { return qubits_; }
  PureState product_state() const;

 private:
  std::array<Eigen::Vector2cd, 3> qubits_;
};

struct ConcentrationOutcome {
  int outcome;
  double probability;
  /// Normalized post-measurement state; empty when the outcome has
  /// probability below 1e-14.
  std::optional<PureState> post_state;
  /// Amplitude pair of the nontrivial outcomes (zero for outcome 0).
  cplx m;
  cplx n;
};

std::array<ConcentrationOutcome, 3> run_permutation_test_k3(const ConcentrationInput& input);

struct ConcentrationUnitaries {
  double theta;
  double lambda;
  std::array<SingleQubitUnitary, 3> gates;  // gate k acts on qubit k
};

/// Throws DegenerateOutcomeError when M = N = 0 and std::invalid_argument
/// unless outcome is 1 or 2.
ConcentrationUnitaries solve_local_unitaries(cplx m, cplx n, int outcome);

/// |<W|state>|^2 for a 3-qubit state.
double w_fidelity(const PureState& state);
/// <W|rho|W> for a 3-qubit density matrix.
double w_fidelity(const DensityMatrix& rho);

/// Post-selected outcome of the full protocol.
struct ConcentrationReport {
  int outcome;
  double probability;
  double fidelity_before;
  double fidelity_after;
  double theta;
  double lambda;
};

/// Runs the test and the correction for outcomes 1 and 2 (skipping those with
/// probability <= min_probability).
std::vector<ConcentrationReport> concentrate(const ConcentrationInput& input,
                                             double min_probability = 1e-12);

/// Empirical variant on three copies of an entangled n-qubit state: the test
/// acts on `label` of each copy, the correction is solved from the dominant
/// eigenvector of the post-measurement 3-qubit reduced state, and fidelities
/// are reported for that reduced state. Requires 3n <= 24.
std::vector<ConcentrationReport> concentrate_entangled(const PureState& psi, int label,
                                                       double min_probability = 1e-12);

}  // namespace gcelab

#endif  // GCELAB_CONCENTRATION_HPP
