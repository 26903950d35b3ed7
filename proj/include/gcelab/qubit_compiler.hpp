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

// Qubit-only form of the permutation-test circuit.
//
// Each K-level ancilla becomes a group of l = ceil(log2 K) qubits. The
// Fourier transform is replaced by F_b, which acts as the K-point DFT on the
// first K basis states of the group and as the identity on the rest, and the
// controlled copy shift by CCP, which reads z from the group (first ancilla
// qubit most significant) and shifts the K target qubits by z.
//
// Register layout: ancilla group g is qubits [g*l, (g+1)*l); the K data
// copies follow in copy-major order, so qubit `label` of copy c is
// n*l + c*n + label.
//
// Text format, one gate per line after the header:
//
//   GCE-CIRCUIT v1 n=<n> K=<K> l=<l>
//   FB anc=<a>,<b>
//   CCP anc=<a>,<b> label=<q> copies=<K>
//   FBD anc=<a>,<b>
//   MEAS anc=<a>,<b>

#ifndef GCELAB_QUBIT_COMPILER_HPP
#define GCELAB_QUBIT_COMPILER_HPP

#include <string>
#include <utility>
#include <vector>

#include "gcelab/permutation_test.hpp"
#include "gcelab/quantum_core.hpp"

namespace gcelab {

/// ceil(log2 K), the number of qubits encoding one K-level ancilla.
int ancilla_width(int copies);

struct FbMatrix {
  int copies;
  CMatrix matrix;  // 2^l x 2^l
};

FbMatrix fb_matrix(int copies);

/// Dense CCP unitary on l ancilla qubits followed by K target qubits (target
/// j is copy j). Group values >= K leave the targets unchanged.
CMatrix ccp_unitary(int copies);

enum class GateKind { kFb, kFbDagger, kCcp, kMeasure };

struct Gate {
  GateKind kind;
  std::vector<int> ancillas;
  int label = -1;   // CCP only
  int copies = 0;   // CCP only

  bool operator==(const Gate&) const = default;
};

struct GateList {
  int num_labels = 0;  // n
  int copies = 0;      // K
  int width = 0;       // l
  std::vector<Gate> gates;

  int num_ancilla_qubits() const { return num_labels * width; }
  int num_data_qubits() const { return num_labels * copies; }

  /// Throws std::invalid_argument if groups are malformed, if a label is not
  /// controlled exactly once, or if a group is not FB, CCP, FBD, MEAS in order.
  void validate() const;

  bool operator==(const GateList&) const = default;
};

GateList compile_circuit(int num_labels, int copies);

std::string serialize_gatelist(const GateList& gates);
/// Throws ParseError with the offending line number.
GateList parse_gatelist(const std::string& text);

/// Largest register simulate_gatelist accepts (ancillas plus data).
inline constexpr int kMaxCircuitQubits = 22;

/// Ancilla readings of one circuit execution.
struct CircuitResult {
  int num_labels;
  int copies;
  int width;
  /// Probability of every joint reading, indexed with group 0's value as the
  /// most significant l bits.
  std::vector<double> readings;
  /// Total probability of readings in which some group decodes to a value >= K.
  double overflow_mass;

  /// Digit-string table over all K^n strings, with digit j read from the group
  /// that controls label j. Throws std::runtime_error if overflow_mass > 1e-10.
  ProbabilityTable table(const GateList& gates) const;
};

CircuitResult run_gatelist(const GateList& gates, const PureState& psi);

/// run_gatelist(...).table(...).
ProbabilityTable simulate_gatelist(const GateList& gates, const PureState& psi);

/// Adjacent transpositions (0,1), (1,2), ..., (K-2,K-1); swapping entries of
/// the vector [0, ..., K-1] in this order yields derangement_power(K, 1).mapping().
std::vector<std::pair<int, int>> decompose_derangement_to_swaps(int copies);

}  // namespace gcelab

#endif  // GCELAB_QUBIT_COMPILER_HPP
