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

#include "gcelab/concentration.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "gcelab/errors.hpp"
#include "gcelab/permutation_test.hpp"
#include "gcelab/states.hpp"

namespace gcelab {

namespace {

constexpr int kCopies = 3;
constexpr double kZeroProbability = 1e-14;

const cplx kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

// (1/3) sum_m conj(w)^{z m} D^(m) applied to a joint register, one test on
// `label` of each of the three copies.
CVector kraus_apply(const PureState& joint, int label, int z) {
  CVector out = CVector::Zero(static_cast<Eigen::Index>(joint.dim()));
  for (int m = 0; m < kCopies; ++m) {
    const PureState shifted = apply_copy_derangement(joint, kCopies, label, m);
    out += std::pow(std::conj(kOmega), (z * m) % kCopies) * shifted.amplitudes();
  }
  return out / static_cast<double>(kCopies);
}

PureState w3() { return w_state(3); }

}  // namespace

ConcentrationInput::ConcentrationInput(std::array<Eigen::Vector2cd, 3> qubits)
    : qubits_(std::move(qubits)) {
  for (const auto& q : qubits_) {
    if (std::abs(q.squaredNorm() - 1.0) > kNormTolerance) {
      throw std::invalid_argument("each input qubit needs |a|^2 + |b|^2 = 1");
    }
  }
}

ConcentrationInput ConcentrationInput::random(Rng& rng) {
  std::array<Eigen::Vector2cd, 3> qubits;
  for (auto& q : qubits) {
    q = haar_random_state(1, rng).amplitudes();
  }
  return ConcentrationInput(qubits);
}

PureState ConcentrationInput::product_state() const {
  return gcelab::product_state(std::span<const Eigen::Vector2cd>(qubits_.data(), qubits_.size()));
}

std::array<ConcentrationOutcome, 3> run_permutation_test_k3(const ConcentrationInput& input) {
  const PureState psi = input.product_state();
  std::array<ConcentrationOutcome, 3> out{};
  for (int z = 0; z < kCopies; ++z) {
    const CVector post = kraus_apply(psi, 0, z);
    const double p = post.squaredNorm();
    ConcentrationOutcome& o = out[static_cast<std::size_t>(z)];
    o.outcome = z;
    o.probability = p;
    if (p > kZeroProbability) o.post_state = PureState::normalized(3, post);
    // Coefficients of |100> and |011>, rescaled to the M, N convention.
    o.m = z == 0 ? cplx{} : 3.0 * post[0b100];
    o.n = z == 0 ? cplx{} : 3.0 * post[0b011];
  }
  return out;
}

ConcentrationUnitaries solve_local_unitaries(cplx m, cplx n, int outcome) {
  if (outcome != 1 && outcome != 2) {
    throw std::invalid_argument("only outcomes 1 and 2 are concentrated");
  }
  if (std::norm(m) + std::norm(n) < 1e-28) {
    throw DegenerateOutcomeError("M = N = 0: the outcome has probability zero");
  }
  const double theta = 2.0 * std::atan2(std::abs(n), std::abs(m));
  const double lambda = (m == 0.0 || n == 0.0) ? 0.0 : -std::arg(n / m);
  const double arg_w = std::arg(kOmega);
  const double arg_w2 = std::arg(kOmega * kOmega);
  const std::array<double, 3> phi =
      outcome == 1 ? std::array<double, 3>{0.0, arg_w2, arg_w} : std::array<double, 3>{0.0, arg_w, arg_w2};
  ConcentrationUnitaries u{theta, lambda, {}};
  for (std::size_t k = 0; k < 3; ++k) u.gates[k] = {theta, phi[k], lambda};
  return u;
}

double w_fidelity(const PureState& state) {
  if (state.num_qubits() != 3) throw std::invalid_argument("W fidelity needs a 3-qubit state");
  return std::norm(w3().inner(state));
}

double w_fidelity(const DensityMatrix& rho) {
  if (rho.dim() != 8) throw std::invalid_argument("W fidelity needs a 3-qubit state");
  const PureState w = w3();
  return (w.amplitudes().adjoint() * rho.matrix() * w.amplitudes()).value().real();
}

namespace {

std::vector<LocalGate> as_gates(const ConcentrationUnitaries& u) {
  return {{0, u.gates[0]}, {1, u.gates[1]}, {2, u.gates[2]}};
}

}  // namespace

std::vector<ConcentrationReport> concentrate(const ConcentrationInput& input, double min_probability) {
  std::vector<ConcentrationReport> reports;
  for (const auto& o : run_permutation_test_k3(input)) {
    if (o.outcome == 0 || o.probability <= min_probability || !o.post_state) continue;
    const auto u = solve_local_unitaries(o.m, o.n, o.outcome);
    const auto gates = as_gates(u);
    const PureState after = apply_local_unitaries(*o.post_state, gates);
    reports.push_back({o.outcome, o.probability, w_fidelity(*o.post_state), w_fidelity(after), u.theta,
                       u.lambda});
  }
  return reports;
}

std::vector<ConcentrationReport> concentrate_entangled(const PureState& psi, int label,
                                                       double min_probability) {
  const int n = psi.num_qubits();
  if (label < 0 || label >= n) throw std::invalid_argument("label out of range");
  if (kCopies * n > kMaxJointQubits) {
    throw ResourceLimitError("three copies of " + std::to_string(n) + " qubits exceed the joint-register guard");
  }
  const PureState joint = psi.tensor(psi).tensor(psi);
  const SubsetLabel keep({label, n + label, 2 * n + label});
  std::vector<ConcentrationReport> reports;
  for (int z = 1; z < kCopies; ++z) {
    const CVector post = kraus_apply(joint, label, z);
    const double p = post.squaredNorm();
    if (p <= min_probability) continue;
    const DensityMatrix rho = partial_trace(PureState::normalized(joint.num_qubits(), post), keep);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix());
    const CVector top = solver.eigenvectors().col(solver.eigenvectors().cols() - 1);
    cplx m = top[0b100];
    cplx nn = top[0b011];
    if (std::norm(m) + std::norm(nn) < 1e-28) continue;
    const auto u = solve_local_unitaries(m, nn, z);
    Eigen::Matrix<cplx, 8, 8> full = Eigen::Matrix<cplx, 8, 8>::Identity();
    {
      const Eigen::Matrix2cd u0 = u.gates[0].matrix();
      const Eigen::Matrix2cd u1 = u.gates[1].matrix();
      const Eigen::Matrix2cd u2 = u.gates[2].matrix();
      for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
          full(r, c) = u0((r >> 2) & 1, (c >> 2) & 1) * u1((r >> 1) & 1, (c >> 1) & 1) * u2(r & 1, c & 1);
        }
      }
    }
    const CMatrix rotated = full * rho.matrix() * full.adjoint();
    reports.push_back({z, p, w_fidelity(rho), w_fidelity(DensityMatrix::unchecked(rotated)), u.theta, u.lambda});
  }
  return reports;
}

}  // namespace gcelab
