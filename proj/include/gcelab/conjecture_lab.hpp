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

// Numerical probes of open GCE inequalities on Haar-random states.
//
//   monotonicity     C(s') <= C(s) for s' subset of s
//   subadditivity    C(s u s') <= C(s) + C(s') for disjoint s, s'
//   q(z) >= 0        q(z) = 2^{-n} sum_alpha (-1)^{sum_{x in alpha} z_x} Tr(rho_alpha^K)
//   NSSSA <= 0       sum over alpha_A of T(alpha_A b C) + T(alpha_A) - T(alpha_A b) - T(alpha_A C)
//
// Every row stores a difference whose sign is conjectured non-negative, so a
// value below the threshold is a counterexample candidate.

#ifndef GCELAB_CONJECTURE_LAB_HPP
#define GCELAB_CONJECTURE_LAB_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gcelab/gce_oracle.hpp"
#include "gcelab/quantum_core.hpp"

namespace gcelab {

/// gce(psi, s, K) - gce(psi, s_sub, K). Throws unless s_sub is a subset of s.
double conj_monotone_diff(const PureState& psi, const SubsetLabel& s_sub, const SubsetLabel& s, double order);

/// gce(s) + gce(s2) - gce(s u s2). Throws if s and s2 overlap.
double conj_subadd_diff(const PureState& psi, const SubsetLabel& s, const SubsetLabel& s2, double order);

/// q(z) for a binary string z of length n and integer K >= 2, from the
/// subset-sum form.
double q_of_z(const PureState& psi, std::span<const int> z, int order);

/// The NSSSA expression in Tsallis entropies. A, {b}, C must partition the
/// qubits.
double nsssa_sum(const PureState& psi, const SubsetLabel& a, int b, const SubsetLabel& c, double order);

/// (2/(K-1)) sum_{alpha subset of A} (Tr(rho^K_{alpha u b}) - Tr(rho^K_alpha)).
double nsssa_trace_form(const PureState& psi, const SubsetLabel& a, int b, double order);

/// -2^{|A|+2} (C(A u b) - C(A)), the same quantity through the GCE.
double nsssa_gce_form(const PureState& psi, const SubsetLabel& a, int b, double order);

struct ConjectureRow {
  std::string conjecture;  // "1.1", "1.2", "q(z)", "NSSSA"
  int n;
  double order;
  std::string subsets;
  int sample_index;
  /// RHS - LHS. For q(z) the minimum over even-parity z; for NSSSA the
  /// negated sum.
  double difference;
  std::uint64_t seed;  // Haar seed of the sampled state
};

struct ConjectureConfig {
  std::vector<int> num_qubits;
  std::vector<double> orders;
  SubsetLabel monotone_sub{std::vector<int>{0, 1, 2}};
  SubsetLabel monotone_super{std::vector<int>{0, 1, 2, 3}};
  SubsetLabel subadd_left{std::vector<int>{0, 1}};
  SubsetLabel subadd_right{std::vector<int>{2, 3}};
  /// q(z) is evaluated only for integer orders.
  bool include_q = true;
  /// NSSSA with A = monotone_sub, b = the single label of
  /// monotone_super \ monotone_sub, C = the remaining qubits.
  bool include_nsssa = true;
  int samples = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
  double threshold = -1e-10;
  /// Applied to every row before flagging; lets a harness inject values.
  std::function<void(ConjectureRow&)> row_hook;
};

struct CounterexampleCandidate {
  ConjectureRow row;
  long double extended_difference;
  bool confirmed;  // still below the threshold in extended precision
  std::string state_json;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  std::vector<CounterexampleCandidate> candidates;
  /// max |q(z)| over odd-parity z (vanishes identically).
  double max_odd_q = 0.0;
  /// max |nsssa_sum - nsssa_trace_form| and |nsssa_sum - nsssa_gce_form|.
  double max_nsssa_identity_residue = 0.0;
};

/// State of sample i at size n is haar_random_state(n, derive_seed(seed, {n, i})),
/// shared across orders. Rows are ordered by (n, K, sample, conjecture).
ConjectureReport conjecture_sweep(const ConjectureConfig& config);

/// Columns conjecture,n,K,subsets,sample_index,difference.
void write_conjecture_csv(std::ostream& out, const std::vector<ConjectureRow>& rows);

}  // namespace gcelab

#endif  // GCELAB_CONJECTURE_LAB_HPP
