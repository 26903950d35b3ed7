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

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library beyond reading amplitudes, so agreement with the
// library is an independent check.

#ifndef GCELAB_TESTS_ORACLES_HPP
#define GCELAB_TESTS_ORACLES_HPP

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;

inline int bit(std::uint64_t index, int n, int q) { return static_cast<int>((index >> (n - 1 - q)) & 1U); }

/// Reduced density matrix on `keep` (ascending labels, first label most
/// significant) as M M^dagger with M indexed by (kept bits, discarded bits).
inline Eigen::MatrixXcd reduced(const Eigen::VectorXcd& amps, int n, const std::vector<int>& keep) {
  const int m = static_cast<int>(keep.size());
  const std::size_t dk = std::size_t{1} << m;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int q : keep) kept[static_cast<std::size_t>(q)] = true;
  const std::size_t dim = std::size_t{1} << n;
  auto sub_index = [&](std::size_t x) {
    std::size_t r = 0;
    for (int q : keep) r = (r << 1) | static_cast<std::size_t>(bit(x, n, q));
    return r;
  };
  auto env_index = [&](std::size_t x) {
    std::size_t r = 0;
    for (int q = 0; q < n; ++q) {
      if (!kept[static_cast<std::size_t>(q)]) r = (r << 1) | static_cast<std::size_t>(bit(x, n, q));
    }
    return r;
  };
  const std::size_t de = dim >> m;
  Eigen::MatrixXcd grid = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(de));
  for (std::size_t x = 0; x < dim; ++x) {
    grid(static_cast<Eigen::Index>(sub_index(x)), static_cast<Eigen::Index>(env_index(x))) =
        amps[static_cast<Eigen::Index>(x)];
  }
  rho = grid * grid.adjoint();
  return rho;
}

/// Tr(rho^K): repeated multiplication for integer K, spectrum otherwise.
inline double trace_power(const Eigen::MatrixXcd& rho, double k) {
  if (k == std::floor(k)) {
    Eigen::MatrixXcd p = rho;
    for (int i = 1; i < static_cast<int>(k); ++i) p = p * rho;
    return p.trace().real();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  double t = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    t += std::pow(std::max(es.eigenvalues()[i], 0.0), k);
  }
  return t;
}

inline std::vector<int> labels_of(std::uint64_t mask, const std::vector<int>& s) {
  std::vector<int> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((mask >> i) & 1U) out.push_back(s[i]);
  }
  return out;
}

/// Tr(rho_alpha^K) with Tr(rho_empty^K) = 1.
inline double subset_trace(const Eigen::VectorXcd& amps, int n, const std::vector<int>& alpha, double k) {
  if (alpha.empty()) return 1.0;
  return trace_power(reduced(amps, n, alpha), k);
}

/// (1 - 2^{-|s|} sum_alpha Tr(rho_alpha^K)) / (K - 1).
inline double gce(const Eigen::VectorXcd& amps, int n, const std::vector<int>& s, double k) {
  double sum = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.size()); ++mask) {
    sum += subset_trace(amps, n, labels_of(mask, s), k);
  }
  return (1.0 - sum / std::ldexp(1.0, static_cast<int>(s.size()))) / (k - 1.0);
}

/// Tensor product of the copies, copy 0 most significant.
inline Eigen::VectorXcd tensor(const std::vector<Eigen::VectorXcd>& copies) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Ones(1);
  for (const auto& c : copies) {
    Eigen::VectorXcd next(out.size() * c.size());
    for (Eigen::Index i = 0; i < out.size(); ++i) next.segment(i * c.size(), c.size()) = out[i] * c;
    out = next;
  }
  return out;
}

/// Cyclic shift of label j by z on K copies of n qubits: copy i of the
/// output holds copy (i + z) mod K of the input.
inline Eigen::VectorXcd shift_label(const Eigen::VectorXcd& joint, int n, int k, int label, int z) {
  const int total = n * k;
  Eigen::VectorXcd out(joint.size());
  for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(joint.size()); ++x) {
    std::uint64_t y = x;
    for (int i = 0; i < k; ++i) {
      const int src = (i + z) % k;
      const int src_bit = bit(x, total, src * n + label);
      const int pos = total - 1 - (i * n + label);
      y = (y & ~(std::uint64_t{1} << pos)) | (static_cast<std::uint64_t>(src_bit) << pos);
    }
    out[static_cast<Eigen::Index>(y)] = joint[static_cast<Eigen::Index>(x)];
  }
  return out;
}

/// Qudit permutation test on n labels of the given K copies: uniform ancilla
/// superposition, controlled shifts, inverse Fourier transform, readout.
/// Returns p(z) keyed by the digit vector.
inline std::map<std::vector<int>, double> permutation_test(const std::vector<Eigen::VectorXcd>& copies, int n) {
  const int k = static_cast<int>(copies.size());
  const Eigen::VectorXcd joint = tensor(copies);
  std::size_t count = 1;
  for (int j = 0; j < n; ++j) count *= static_cast<std::size_t>(k);
  auto digits = [&](std::size_t v) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
      d[static_cast<std::size_t>(j)] = static_cast<int>(v % static_cast<std::size_t>(k));
      v /= static_cast<std::size_t>(k);
    }
    return d;
  };
  std::vector<Eigen::VectorXcd> branches;
  for (std::size_t c = 0; c < count; ++c) {
    const auto cd = digits(c);
    Eigen::VectorXcd v = joint;
    for (int j = 0; j < n; ++j) v = shift_label(v, n, k, j, cd[static_cast<std::size_t>(j)]);
    branches.push_back(v);
  }
  const double two_pi_over_k = 2.0 * std::numbers::pi / k;
  std::map<std::vector<int>, double> table;
  for (std::size_t zi = 0; zi < count; ++zi) {
    const auto zd = digits(zi);
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(joint.size());
    for (std::size_t c = 0; c < count; ++c) {
      const auto cd = digits(c);
      int dot = 0;
      for (int j = 0; j < n; ++j) dot += zd[static_cast<std::size_t>(j)] * cd[static_cast<std::size_t>(j)];
      amp += std::polar(1.0, -two_pi_over_k * dot) * branches[c];
    }
    table[zd] = amp.squaredNorm() / static_cast<double>(count * count);
  }
  return table;
}

/// e_j(x) by enumerating all j-subsets.
inline double elementary_symmetric(const std::vector<double>& x, int j) {
  double sum = 0.0;
  const std::size_t n = x.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != j) continue;
    double prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) prod *= x[i];
    }
    sum += prod;
  }
  return sum;
}

}  // namespace oracle

#endif  // GCELAB_TESTS_ORACLES_HPP
