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

// Dense pure states over qubit registers, reduced density matrices and the
// handful of state manipulations the rest of the library is built on.
//
// Conventions shared by every module and every file format:
//   * qubits are labelled 0..n-1;
//   * qubit 0 is the most significant bit of a basis-state index, so the
//     amplitude of |b_0 b_1 ... b_{n-1}> sits at index sum_q b_q 2^{n-1-q};
//   * global phases are never normalized away.

#ifndef GCELAB_QUANTUM_CORE_HPP
#define GCELAB_QUANTUM_CORE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gcelab/random.hpp"

namespace gcelab {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
/// Eigenvalues in [-kPsdTolerance, 0) are treated as numerical zeros.
inline constexpr double kPsdTolerance = 1e-10;

/// Largest register handled by the dense routines (2^26 amplitudes, 1 GiB).
inline constexpr int kMaxDenseQubits = 26;

/// Normalized amplitude vector over n qubits.
class PureState {
 public:
  /// Validates length 2^n and unit norm (within kNormTolerance).
  PureState(int num_qubits, CVector amplitudes);

  /// Rescales `amplitudes` to unit norm before validating. Throws on a zero
  /// vector.
  static PureState normalized(int num_qubits, CVector amplitudes);

  /// Computational basis state |index>.
  static PureState basis(int num_qubits, std::uint64_t index);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  const CVector& amplitudes() const noexcept { return amplitudes_; }
  cplx operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

  /// <this|other>.
  cplx inner(const PureState& other) const;

  /// |this> (x) |other>; the qubits of `other` follow those of `this`.
  PureState tensor(const PureState& other) const;

 private:
  int num_qubits_;
  CVector amplitudes_;
};

/// Hermitian, unit-trace matrix. Positivity is checked lazily by the
/// spectral routines (see trace_power).
class DensityMatrix {
 public:
  /// Validates squareness, hermiticity and trace.
  explicit DensityMatrix(CMatrix entries);

  static DensityMatrix from_pure(const PureState& psi);

  /// Skips validation; for matrices that are valid by construction.
  static DensityMatrix unchecked(CMatrix entries);

  Eigen::Index dim() const noexcept { return entries_.rows(); }
  const CMatrix& matrix() const noexcept { return entries_; }

  /// Ascending eigenvalues of the Hermitian part.
  RVector eigenvalues() const;

 private:
  DensityMatrix() = default;
  CMatrix entries_;
};

/// Strictly increasing list of 0-based qubit labels.
class SubsetLabel {
 public:
  SubsetLabel() = default;
  /// Throws std::invalid_argument unless `indices` is strictly increasing and
  /// non-negative.
  explicit SubsetLabel(std::vector<int> indices);
  /// Sorts first; throws on duplicates or negatives.
  static SubsetLabel from_unsorted(std::vector<int> indices);
  /// Bits of `mask` are read with bit q meaning qubit q.
  static SubsetLabel from_mask(std::uint64_t mask);
  static SubsetLabel all(int num_qubits);

  const std::vector<int>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(int q) const;
  std::uint64_t mask() const;

  /// Throws std::invalid_argument if any label is >= num_qubits.
  void check_valid_for(int num_qubits) const;

  /// Labels of `0..num_qubits-1` not in this subset.
  SubsetLabel complement(int num_qubits) const;

  /// Subset selected by `bits` over the positions of this subset: bit i of
  /// `bits` keeps indices()[i].
  SubsetLabel select(std::uint64_t bits) const;

  bool operator==(const SubsetLabel&) const = default;

 private:
  std::vector<int> indices_;
};

/// U(theta, phi, lambda) = [[cos t/2, -e^{i lambda} sin t/2],
///                          [e^{i phi} sin t/2, e^{i(phi+lambda)} cos t/2]].
struct SingleQubitUnitary {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;

  Eigen::Matrix2cd matrix() const;
};

using LocalGate = std::pair<int, SingleQubitUnitary>;

/// Haar-random state: normalized vector of i.i.d. standard complex Gaussians.
PureState haar_random_state(int num_qubits, std::uint64_t seed);
PureState haar_random_state(int num_qubits, Rng& rng);

/// Reduced state on `keep`; the kept qubits retain their relative order, with
/// keep.indices()[0] as the most significant bit of the reduced index.
DensityMatrix partial_trace(const PureState& psi, const SubsetLabel& keep);

/// Sum_r p_r^K over the spectrum of `rho`. Eigenvalues in [-1e-10, 0) are
/// clamped to zero; anything more negative is rejected.
double trace_power(const DensityMatrix& rho, double order);

/// Same, from an already computed spectrum.
double trace_power_of_spectrum(const RVector& eigenvalues, double order);

/// sqrt(1 - |<a|b>|^2), the trace distance between two pure states.
double trace_distance_pure(const PureState& a, const PureState& b);

/// sqrt(1 - eps^2)|psi> + eps|phi_perp>, with phi_perp a Haar-random state
/// orthogonalized against psi. The trace distance to psi is exactly eps.
PureState perturb_state(const PureState& psi, double epsilon, std::uint64_t seed);
PureState perturb_state(const PureState& psi, double epsilon, Rng& rng);

/// Applies U_q on qubit q for each (q, U_q); at most one gate per qubit.
PureState apply_local_unitaries(const PureState& psi, std::span<const LocalGate> gates);

/// Applies an arbitrary 2x2 matrix on one qubit, in place. No unitarity check.
void apply_single_qubit_matrix(CVector& amplitudes, int num_qubits, int qubit,
                               const Eigen::Matrix2cd& m);

}  // namespace gcelab

#endif  // GCELAB_QUANTUM_CORE_HPP
