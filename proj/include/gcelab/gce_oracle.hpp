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

// Exact generalized concentratable entanglement of pure states,
//
//   C_K(s) = 1/(K-1) * (1 - 2^{-|s|} sum_{alpha subset of s} Tr(rho_alpha^K)),
//
// with Tr(rho_empty^K) = 1, plus closed forms for GHZ and W states and a
// Dicke-basis fast path for permutation-symmetric spin-squeezed states.

#ifndef GCELAB_GCE_ORACLE_HPP
#define GCELAB_GCE_ORACLE_HPP

#include <vector>

#include "gcelab/quantum_core.hpp"

namespace gcelab {

/// Order K > 1 and non-empty measured subset s.
struct GceParams {
  GceParams(double order, SubsetLabel subset);

  double order;
  SubsetLabel subset;
};

/// (1 - Tr rho^K) / (K - 1).
double tsallis_entropy(const DensityMatrix& rho, double order);

/// Tr(rho_alpha^K) for the reduced state of `psi` on `alpha`. The empty set
/// gives 1; subsets larger than n/2 are evaluated on their complement.
double subset_trace_power(const PureState& psi, const SubsetLabel& alpha, double order);

/// Tr(rho_alpha^K) for every alpha in P(s), indexed by the bitmask over the
/// positions of s (bit i selects s.indices()[i]).
std::vector<double> subset_trace_powers(const PureState& psi, const SubsetLabel& s, double order);

double gce(const PureState& psi, const GceParams& params);

/// Same quantity evaluated in long double arithmetic; used to re-check
/// borderline conjecture counterexamples.
long double gce_extended(const PureState& psi, const GceParams& params);

/// Tr(rho_alpha^K) in long double arithmetic.
long double subset_trace_power_extended(const PureState& psi, const SubsetLabel& alpha,
                                       long double order);

double gce_ghz_closed_form(int num_qubits, int subset_size, double order);
double gce_w_closed_form(int num_qubits, int subset_size, double order);

/// C(n, k) in floating point via log-gamma.
double binomial(int n, int k);

struct SqueezingParams {
  SqueezingParams(int num_qubits, double mu);

  int num_qubits;
  double mu;  // interaction strength 2*chi*t, radians
};

/// Reduced state of the spin-squeezed state on any `subsystem_size` qubits,
/// expressed in the Dicke basis |D(m, 0)>, ..., |D(m, m)>.
struct SymmetricReducedDM {
  int subsystem_size;
  CMatrix coefficients;

  DensityMatrix as_density_matrix() const;
};

SymmetricReducedDM spin_squeezed_reduced_dm(const SqueezingParams& params, int subsystem_size);

/// GCE of the spin-squeezed state with s of the given size; exploits
/// permutation symmetry so only subsystem sizes 0..n/2 are diagonalized.
double gce_spin_squeezed(const SqueezingParams& params, int subset_size, double order);

}  // namespace gcelab

#endif  // GCELAB_GCE_ORACLE_HPP
