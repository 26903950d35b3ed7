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

#include "gcelab/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace gcelab {

namespace {

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1) {
    throw std::invalid_argument("qubit count must be >= 1, got " + std::to_string(num_qubits));
  }
  if (num_qubits > kMaxDenseQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(num_qubits) +
                                " exceeds the dense limit of " + std::to_string(kMaxDenseQubits));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(int num_qubits, CVector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(num_qubits);
  const auto expected = Eigen::Index{1} << num_qubits;
  if (amplitudes_.size() != expected) {
    throw std::invalid_argument("amplitude vector has length " + std::to_string(amplitudes_.size()) +
                                ", expected 2^" + std::to_string(num_qubits));
  }
  const double norm = amplitudes_.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized (norm " + std::to_string(norm) + ")");
  }
}

PureState PureState::normalized(int num_qubits, CVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return PureState(num_qubits, std::move(amplitudes));
}

PureState PureState::basis(int num_qubits, std::uint64_t index) {
  check_qubit_count(num_qubits);
  const auto dim = Eigen::Index{1} << num_qubits;
  if (index >= static_cast<std::uint64_t>(dim)) {
    throw std::invalid_argument("basis index out of range");
  }
  CVector v = CVector::Zero(dim);
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return PureState(num_qubits, std::move(v));
}

cplx PureState::inner(const PureState& other) const {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("inner product of states with different qubit counts");
  }
  return amplitudes_.dot(other.amplitudes_);  // conjugates the left operand
}

PureState PureState::tensor(const PureState& other) const {
  const Eigen::Index db = other.amplitudes_.size();
  CVector v(amplitudes_.size() * db);
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
    v.segment(i * db, db) = amplitudes_[i] * other.amplitudes_;
  }
  return PureState(num_qubits_ + other.num_qubits_, std::move(v));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("density matrix must be square and non-empty");
  }
  const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTolerance) {
    throw std::invalid_argument("density matrix is not Hermitian (deviation " +
                                std::to_string(herm) + ")");
  }
  const cplx tr = entries_.trace();
  if (std::abs(tr - cplx(1.0, 0.0)) > kTraceTolerance) {
    throw std::invalid_argument("density matrix trace is " + std::to_string(tr.real()) + ", not 1");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return unchecked(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::unchecked(CMatrix entries) {
  DensityMatrix rho;
  rho.entries_ = std::move(entries);
  return rho;
}

RVector DensityMatrix::eigenvalues() const {
  if (entries_.rows() == 1) {
    return RVector::Constant(1, entries_(0, 0).real());
  }
  const CMatrix herm = 0.5 * (entries_ + entries_.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalue decomposition failed");
  }
  return solver.eigenvalues();
}

// ---------------------------------------------------------------------------
// SubsetLabel

SubsetLabel::SubsetLabel(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0) {
      throw std::invalid_argument("qubit labels must be non-negative");
    }
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw std::invalid_argument("subset labels must be strictly increasing");
    }
  }
}

SubsetLabel SubsetLabel::from_unsorted(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw std::invalid_argument("duplicate qubit label in subset");
  }
  return SubsetLabel(std::move(indices));
}

SubsetLabel SubsetLabel::from_mask(std::uint64_t mask) {
  std::vector<int> idx;
  for (int q = 0; q < 64; ++q) {
    if ((mask >> q) & 1U) idx.push_back(q);
  }
  return SubsetLabel(std::move(idx));
}

SubsetLabel SubsetLabel::all(int num_qubits) {
  std::vector<int> idx(static_cast<std::size_t>(std::max(num_qubits, 0)));
  for (int q = 0; q < num_qubits; ++q) idx[static_cast<std::size_t>(q)] = q;
  return SubsetLabel(std::move(idx));
}

bool SubsetLabel::contains(int q) const {
  return std::binary_search(indices_.begin(), indices_.end(), q);
}

std::uint64_t SubsetLabel::mask() const {
  std::uint64_t m = 0;
  for (int q : indices_) {
    if (q >= 64) throw std::invalid_argument("subset label too large for a 64-bit mask");
    m |= std::uint64_t{1} << q;
  }
  return m;
}

void SubsetLabel::check_valid_for(int num_qubits) const {
  for (int q : indices_) {
    if (q >= num_qubits) {
      throw std::invalid_argument("qubit label " + std::to_string(q) + " out of range for " +
                                  std::to_string(num_qubits) + " qubits");
    }
  }
}

SubsetLabel SubsetLabel::complement(int num_qubits) const {
  check_valid_for(num_qubits);
  std::vector<int> rest;
  for (int q = 0; q < num_qubits; ++q) {
    if (!contains(q)) rest.push_back(q);
  }
  return SubsetLabel(std::move(rest));
}

SubsetLabel SubsetLabel::select(std::uint64_t bits) const {
  std::vector<int> picked;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if ((bits >> i) & 1U) picked.push_back(indices_[i]);
  }
  return SubsetLabel(std::move(picked));
}

// ---------------------------------------------------------------------------
// SingleQubitUnitary

Eigen::Matrix2cd SingleQubitUnitary::matrix() const {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::Matrix2cd u;
  u << c, -std::polar(1.0, lambda) * s, std::polar(1.0, phi) * s, std::polar(1.0, phi + lambda) * c;
  return u;
}

// ---------------------------------------------------------------------------
// Operations

PureState haar_random_state(int num_qubits, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_state(num_qubits, rng);
}

PureState haar_random_state(int num_qubits, Rng& rng) {
  check_qubit_count(num_qubits);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto dim = Eigen::Index{1} << num_qubits;
  CVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v[i] = cplx(re, im);
  }
  return PureState::normalized(num_qubits, std::move(v));
}

DensityMatrix partial_trace(const PureState& psi, const SubsetLabel& keep) {
  const int n = psi.num_qubits();
  keep.check_valid_for(n);
  const int k = static_cast<int>(keep.size());
  if (k == 0) {
    return DensityMatrix::unchecked(CMatrix::Constant(1, 1, cplx(1.0, 0.0)));
  }
  const SubsetLabel rest = keep.complement(n);

  // Reshape |psi> into a 2^k x 2^{n-k} matrix A, so that rho_keep = A A^dagger.
  const Eigen::Index rows = Eigen::Index{1} << k;
  const Eigen::Index cols = Eigen::Index{1} << (n - k);
  std::vector<std::uint64_t> keep_bits(static_cast<std::size_t>(rows), 0);
  std::vector<std::uint64_t> rest_bits(static_cast<std::size_t>(cols), 0);
  for (Eigen::Index a = 0; a < rows; ++a) {
    std::uint64_t idx = 0;
    for (int i = 0; i < k; ++i) {
      if ((a >> (k - 1 - i)) & 1) idx |= std::uint64_t{1} << (n - 1 - keep.indices()[static_cast<std::size_t>(i)]);
    }
    keep_bits[static_cast<std::size_t>(a)] = idx;
  }
  const int r = n - k;
  for (Eigen::Index b = 0; b < cols; ++b) {
    std::uint64_t idx = 0;
    for (int i = 0; i < r; ++i) {
      if ((b >> (r - 1 - i)) & 1) idx |= std::uint64_t{1} << (n - 1 - rest.indices()[static_cast<std::size_t>(i)]);
    }
    rest_bits[static_cast<std::size_t>(b)] = idx;
  }
  CMatrix a(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      a(i, j) = psi[keep_bits[static_cast<std::size_t>(i)] | rest_bits[static_cast<std::size_t>(j)]];
    }
  }
  CMatrix rho = a * a.adjoint();
  return DensityMatrix::unchecked(std::move(rho));
}

double trace_power_of_spectrum(const RVector& eigenvalues, double order) {
  if (!(order > 1.0) || !std::isfinite(order)) {
    throw std::invalid_argument("order K must be a finite real > 1");
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double p = eigenvalues[i];
    if (p < -kPsdTolerance) {
      throw std::invalid_argument("matrix is not positive semidefinite (eigenvalue " +
                                  std::to_string(p) + ")");
    }
    if (p > 0.0) total += std::pow(p, order);
  }
  return total;
}

double trace_power(const DensityMatrix& rho, double order) {
  if (!(order > 1.0)) {
    throw std::invalid_argument("order K must be > 1");
  }
  return trace_power_of_spectrum(rho.eigenvalues(), order);
}

double trace_distance_pure(const PureState& a, const PureState& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("trace distance between states of different dimension");
  }
  // Norm of the component of b orthogonal to a; avoids the cancellation in
  // sqrt(1 - |<a|b>|^2) for nearly identical states.
  const CVector residual = b.amplitudes() - a.inner(b) * a.amplitudes();
  return std::min(1.0, residual.norm());
}

PureState perturb_state(const PureState& psi, double epsilon, std::uint64_t seed) {
  Rng rng(seed);
  return perturb_state(psi, epsilon, rng);
}

PureState perturb_state(const PureState& psi, double epsilon, Rng& rng) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
  const CVector& v = psi.amplitudes();
  CVector perp;
  // A Haar draw is parallel to psi with probability zero; retry on the
  // measure-zero event rather than dividing by ~0.
  for (;;) {
    perp = haar_random_state(psi.num_qubits(), rng).amplitudes();
    perp -= v * v.dot(perp);
    perp -= v * v.dot(perp);
    const double norm = perp.norm();
    if (norm > 1e-8) {
      perp /= norm;
      break;
    }
  }
  CVector out = std::sqrt(1.0 - epsilon * epsilon) * v + epsilon * perp;
  return PureState::normalized(psi.num_qubits(), std::move(out));
}

void apply_single_qubit_matrix(CVector& amplitudes, int num_qubits, int qubit,
                               const Eigen::Matrix2cd& m) {
  if (qubit < 0 || qubit >= num_qubits) {
    throw std::invalid_argument("qubit index out of range");
  }
  const Eigen::Index stride = Eigen::Index{1} << (num_qubits - 1 - qubit);
  const Eigen::Index dim = amplitudes.size();
  for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
    for (Eigen::Index off = 0; off < stride; ++off) {
      const Eigen::Index i0 = base + off;
      const Eigen::Index i1 = i0 + stride;
      const cplx a0 = amplitudes[i0];
      const cplx a1 = amplitudes[i1];
      amplitudes[i0] = m(0, 0) * a0 + m(0, 1) * a1;
      amplitudes[i1] = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }
}

PureState apply_local_unitaries(const PureState& psi, std::span<const LocalGate> gates) {
  const int n = psi.num_qubits();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& [q, u] : gates) {
    if (q < 0 || q >= n) {
      throw std::invalid_argument("gate qubit index " + std::to_string(q) + " out of range");
    }
    if (seen[static_cast<std::size_t>(q)]) {
      throw std::invalid_argument("more than one gate on qubit " + std::to_string(q));
    }
    seen[static_cast<std::size_t>(q)] = true;
  }
  CVector v = psi.amplitudes();
  for (const auto& [q, u] : gates) {
    apply_single_qubit_matrix(v, n, q, u.matrix());
  }
  return PureState(n, std::move(v));
}

}  // namespace gcelab
