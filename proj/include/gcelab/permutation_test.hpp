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

// Parallelized permutation test on K copies of an n-qubit state.
//
// Each qubit label j gets a K-level ancilla prepared by a Fourier transform,
// which controls the cyclic copy shift D_j^(z); a second (inverse) Fourier
// transform and a measurement yield the digit z_j. Conditioned on the digit
// string z the copies undergo
//
//   K_z = prod_j (1/K) sum_m conj(w)^{z_j m} D_j^(m),   w = exp(2 pi i / K),
//
// and because K_z is a Hermitian projector, p(z) = <Psi|K_z|Psi> with
// |Psi> = |psi>^{(x)K}. For prime K the marginal sums of p(z) reveal
// Tr(rho_alpha^K) for every subsystem alpha.
//
// Copy shift convention: D^(z) places the content of input copy (i+z) mod K
// on output copy i. Joint registers are laid out copy-major: copy c holds
// qubits [c*n, (c+1)*n).

#ifndef GCELAB_PERMUTATION_TEST_HPP
#define GCELAB_PERMUTATION_TEST_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gcelab/gce_oracle.hpp"
#include "gcelab/quantum_core.hpp"

namespace gcelab {

/// Deterministic trial division.
bool is_prime(int k);

/// Throws UnsupportedOrderError unless `k` is prime.
void require_prime_order(int k);

/// Cyclic shift of K copies by `power` positions.
class CopyPermutation {
 public:
  CopyPermutation(int copies, int power);

  int copies() const noexcept { return static_cast<int>(source_.size()); }
  int power() const noexcept { return power_; }
  /// Output copy i receives input copy source(i) = (i + power) mod K.
  int source(int i) const { return source_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& mapping() const noexcept { return source_; }

  /// (D^(z))^q, which equals D^(z q mod K).
  CopyPermutation pow(int q) const;

  /// Disjoint cycles of the map i -> source(i), each starting at its least
  /// element.
  std::vector<std::vector<int>> cycles() const;

 private:
  int power_;
  std::vector<int> source_;
};

CopyPermutation derangement_power(int copies, int z);

/// True iff the permutation is one cycle through all K elements.
bool is_single_cycle(const CopyPermutation& perm);

/// Applies D^(z) to the K qubits that carry `qubit_label` in a copy-major
/// joint register of K*n qubits.
PureState apply_copy_derangement(const PureState& joint, int copies, int qubit_label, int z);

/// Tr(P rho^{(x)K}) for the copy permutation P, evaluated by explicit
/// summation over the d^K product basis.
cplx copy_permutation_trace(const DensityMatrix& rho, const CopyPermutation& perm);

/// Ancilla readout z_0 ... z_{n-1} in radix K.
class DigitString {
 public:
  DigitString(int radix, std::vector<int> digits);

  int radix() const noexcept { return radix_; }
  const std::vector<int>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  int operator[](std::size_t i) const { return digits_[i]; }

  /// Sum of the digits over `alpha`, modulo the radix.
  int residue(const SubsetLabel& alpha) const;
  /// Sum of all digits, modulo the radix.
  int residue() const;

  /// Base-K text, one character per digit, digit 0 first (0-9 then a-z).
  std::string to_string() const;
  static DigitString parse(int radix, const std::string& text);

  auto operator<=>(const DigitString&) const = default;

 private:
  int radix_;
  std::vector<int> digits_;
};

/// Distribution over digit strings, kept sorted lexicographically.
class ProbabilityTable {
 public:
  struct Entry {
    DigitString digits;
    double probability;
  };

  ProbabilityTable(int radix, int num_labels, std::vector<Entry> entries);

  int radix() const noexcept { return radix_; }
  int num_labels() const noexcept { return num_labels_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  double total() const;
  /// 0 for strings absent from the table.
  double probability(const DigitString& z) const;
  /// Sum of p(z) over strings whose digits on alpha sum to `residue` mod K.
  double residue_mass(const SubsetLabel& alpha, int residue) const;
  /// Mass on strings with a non-zero total digit sum.
  double off_support_mass() const;

  /// CSV with header `digits,probability`.
  void write_csv(std::ostream& out) const;
  static ProbabilityTable read_csv(std::istream& in, int radix);

 private:
  int radix_;
  int num_labels_;
  std::vector<Entry> entries_;
};

struct TableOptions {
  /// Lifts the K*n <= kMaxJointQubits guard.
  bool allow_large = false;
  /// Also evaluate strings whose total digit sum is non-zero mod K (these
  /// vanish for identical pure copies).
  bool include_off_support = false;
};

/// Guard on the joint register of K*n qubits (2^24 amplitudes ~ 256 MiB).
inline constexpr int kMaxJointQubits = 24;

/// Exact p(z) for K identical copies of psi, restricted to strings with
/// total digit sum = 0 mod K unless options say otherwise.
ProbabilityTable exact_probability_table(const PureState& psi, int copies,
                                         const TableOptions& options = {});

/// Exact p(z) for the product input psi_1 (x) ... (x) psi_K; every string is
/// evaluated.
ProbabilityTable exact_probability_table(std::span<const PureState> copies,
                                         const TableOptions& options = {});

/// Both readouts of Tr(rho_alpha^K) from a table:
///   from_zero_residue    = (K * sum_{res=0} p - 1) / (K - 1)
///   from_nonzero_residue = 1 - K * sum_{res=t} p
/// The mass on each residue class t != 0 equals (1 - Tr(rho_alpha^K)) / K, so
/// the second readout uses the single class t = 1.
struct TracePowerEstimate {
  double from_zero_residue;
  double from_nonzero_residue;
};

TracePowerEstimate estimate_trace_power(const ProbabilityTable& table, const SubsetLabel& alpha);

/// Both GCE estimators built from the table marginals:
///   from_zero_residue    = K / (2^|s| (K-1)^2) sum_alpha (1 - sum_{res=0} p)
///   from_nonzero_residue = K / (2^|s| (K-1))   sum_alpha sum_{res=1} p
struct GceEstimate {
  double from_zero_residue;
  double from_nonzero_residue;
};

/// params.order must equal the table radix.
GceEstimate estimate_gce(const ProbabilityTable& table, const GceParams& params);

/// Empirical frequencies of `shots` multinomial draws from `table`.
ProbabilityTable sample_table(const ProbabilityTable& table, std::uint64_t shots,
                              std::uint64_t seed);

/// GCE value reported by the estimator when the K copies differ:
///   1/(K-1) (1 - 2^{-|s|} sum_alpha 1/(K-1) sum_{k=1}^{K-1}
///                Re Tr(rho'_{0,a} rho'_{k,a} rho'_{2k,a} ... rho'_{(K-1)k,a})).
double distinct_copy_gce(std::span<const PureState> copies, const GceParams& params);

/// Total-variation distance over the union of both supports.
double total_variation(const ProbabilityTable& a, const ProbabilityTable& b);

}  // namespace gcelab

#endif  // GCELAB_PERMUTATION_TEST_HPP
