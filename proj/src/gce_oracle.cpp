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

#include "gcelab/gce_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace gcelab {

namespace {

void check_order(double order) {
  if (!(order > 1.0) || !std::isfinite(order)) {
    throw std::invalid_argument("order K must be a finite real > 1");
  }
}

void check_subset_size(int num_qubits, int subset_size) {
  if (num_qubits < 1) throw std::invalid_argument("qubit count must be >= 1");
  if (subset_size < 1 || subset_size > num_qubits) {
    throw std::invalid_argument("subset size " + std::to_string(subset_size) +
                                " outside [1, " + std::to_string(num_qubits) + "]");
  }
}

// Average of the subset trace powers folded into the definition.
double gce_from_trace_powers(const std::vector<double>& traces, std::size_t subset_size,
                             double order) {
  double sum = 0.0;
  for (double t : traces) sum += t;
  return (1.0 - std::ldexp(sum, -static_cast<int>(subset_size))) / (order - 1.0);
}

}  // namespace

GceParams::GceParams(double order_, SubsetLabel subset_)
    : order(order_), subset(std::move(subset_)) {
  check_order(order);
  if (subset.empty()) throw std::invalid_argument("measured subset s must be non-empty");
}

double tsallis_entropy(const DensityMatrix& rho, double order) {
  check_order(order);
  return (1.0 - trace_power(rho, order)) / (order - 1.0);
}

double subset_trace_power(const PureState& psi, const SubsetLabel& alpha, double order) {
  const int n = psi.num_qubits();
  alpha.check_valid_for(n);
  if (alpha.empty() || static_cast<int>(alpha.size()) == n) return 1.0;
  if (2 * static_cast<int>(alpha.size()) > n) {
    return trace_power(partial_trace(psi, alpha.complement(n)), order);
  }
  return trace_power(partial_trace(psi, alpha), order);
}

std::vector<double> subset_trace_powers(const PureState& psi, const SubsetLabel& s, double order) {
  check_order(order);
  s.check_valid_for(psi.num_qubits());
  if (s.size() > 30) throw std::invalid_argument("subset too large to enumerate");
  const std::uint64_t count = std::uint64_t{1} << s.size();
  std::vector<double> traces(count, 1.0);
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    traces[bits] = subset_trace_power(psi, s.select(bits), order);
  }
  return traces;
}

double gce(const PureState& psi, const GceParams& params) {
  const auto traces = subset_trace_powers(psi, params.subset, params.order);
  return gce_from_trace_powers(traces, params.subset.size(), params.order);
}

long double subset_trace_power_extended(const PureState& psi, const SubsetLabel& alpha,
                                       long double order) {
  using LComplex = std::complex<long double>;
  using LMatrix = Eigen::Matrix<LComplex, Eigen::Dynamic, Eigen::Dynamic>;
  const int n = psi.num_qubits();
  alpha.check_valid_for(n);
  if (!(order > 1.0L)) throw std::invalid_argument("order K must be > 1");
  if (alpha.empty() || static_cast<int>(alpha.size()) == n) return 1.0L;
  const SubsetLabel keep = 2 * static_cast<int>(alpha.size()) > n ? alpha.complement(n) : alpha;
  // Reduced matrix rebuilt in long double from the amplitudes.
  const SubsetLabel rest = keep.complement(n);
  const int k = static_cast<int>(keep.size());
  const Eigen::Index rows = Eigen::Index{1} << k;
  const Eigen::Index cols = Eigen::Index{1} << (n - k);
  LMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      std::uint64_t idx = 0;
      for (int b = 0; b < k; ++b) {
        if ((i >> (k - 1 - b)) & 1) idx |= std::uint64_t{1} << (n - 1 - keep.indices()[static_cast<std::size_t>(b)]);
      }
      for (int b = 0; b < n - k; ++b) {
        if ((j >> (n - k - 1 - b)) & 1) idx |= std::uint64_t{1} << (n - 1 - rest.indices()[static_cast<std::size_t>(b)]);
      }
      const cplx amp = psi[idx];
      a(i, j) = LComplex(amp.real(), amp.imag());
    }
  }
  const LMatrix rho = a * a.adjoint();
  Eigen::SelfAdjointEigenSolver<LMatrix> solver(rho, Eigen::EigenvaluesOnly);
  long double tr = 0.0L;
  for (Eigen::Index r = 0; r < solver.eigenvalues().size(); ++r) {
    const long double p = solver.eigenvalues()[r];
    if (p > 0.0L) tr += std::pow(p, order);
  }
  return tr;
}

long double gce_extended(const PureState& psi, const GceParams& params) {
  params.subset.check_valid_for(psi.num_qubits());
  const long double order = params.order;
  const std::uint64_t count = std::uint64_t{1} << params.subset.size();
  long double sum = 1.0L;
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    sum += subset_trace_power_extended(psi, params.subset.select(bits), order);
  }
  return (1.0L - std::ldexp(sum, -static_cast<int>(params.subset.size()))) / (order - 1.0L);
}

double gce_ghz_closed_form(int num_qubits, int subset_size, double order) {
  check_subset_size(num_qubits, subset_size);
  check_order(order);
  // Every proper non-empty marginal has spectrum {1/2, 1/2}; alpha = S is pure.
  const int m = subset_size - (subset_size == num_qubits ? 1 : 0);
  const double pow2m = std::ldexp(1.0, m);
  const double inner = 1.0 + (pow2m - 1.0) / std::pow(2.0, order - 1.0);
  return (1.0 - inner / pow2m) / (order - 1.0);
}

double gce_w_closed_form(int num_qubits, int subset_size, double order) {
  check_subset_size(num_qubits, subset_size);
  check_order(order);
  // A j-qubit marginal has spectrum {(n-j)/n, j/n}.
  const double n = num_qubits;
  double sum = 0.0;
  for (int j = 0; j <= subset_size; ++j) {
    const double w = binomial(subset_size, j);
    sum += w * (std::pow((n - j) / n, order) + std::pow(j / n, order));
  }
  return (1.0 - std::ldexp(sum, -subset_size)) / (order - 1.0);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

// ---------------------------------------------------------------------------
// Spin-squeezed states in the Dicke basis

SqueezingParams::SqueezingParams(int num_qubits_, double mu_) : num_qubits(num_qubits_), mu(mu_) {
  if (num_qubits < 1) throw std::invalid_argument("spin-squeezed state needs n >= 1");
  if (!std::isfinite(mu)) throw std::invalid_argument("interaction strength mu must be finite");
}

DensityMatrix SymmetricReducedDM::as_density_matrix() const {
  return DensityMatrix::unchecked(coefficients);
}

SymmetricReducedDM spin_squeezed_reduced_dm(const SqueezingParams& params, int subsystem_size) {
  const int n = params.num_qubits;
  const int m = subsystem_size;
  if (m < 0 || m > n) {
    throw std::invalid_argument("subsystem size " + std::to_string(m) + " outside [0, " +
                                std::to_string(n) + "]");
  }
  const int rest = n - m;
  // Global coefficients c_{k,l} = a_k conj(a_l) with
  // a_k = 2^{-n/2} sqrt(C(n,k)) exp(-i (n/2-k)^2 mu / 2).
  std::vector<cplx> amp(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    const double d = n / 2.0 - k;
    const double mag = std::exp(0.5 * (std::log(binomial(n, k)) - n * std::log(2.0)));
    amp[static_cast<std::size_t>(k)] = std::polar(mag, -d * d * params.mu / 2.0);
  }
  // |D(n,k)> = sum_kappa sqrt(C(m,k-kappa) C(n-m,kappa) / C(n,k)) |D(m,k-kappa)>|D(n-m,kappa)>,
  // so tracing out the n-m qubits contracts over kappa.
  SymmetricReducedDM out{m, CMatrix::Zero(m + 1, m + 1)};
  for (int ka = 0; ka <= m; ++ka) {
    for (int la = 0; la <= m; ++la) {
      cplx acc = 0.0;
      for (int kappa = 0; kappa <= rest; ++kappa) {
        const int k = ka + kappa;
        const int l = la + kappa;
        const double log_w = std::log(binomial(rest, kappa)) +
                             0.5 * (std::log(binomial(m, ka)) + std::log(binomial(m, la)) -
                                    std::log(binomial(n, k)) - std::log(binomial(n, l)));
        acc += std::exp(log_w) * amp[static_cast<std::size_t>(k)] *
               std::conj(amp[static_cast<std::size_t>(l)]);
      }
      out.coefficients(ka, la) = acc;
    }
  }
  return out;
}

double gce_spin_squeezed(const SqueezingParams& params, int subset_size, double order) {
  const int n = params.num_qubits;
  check_subset_size(n, subset_size);
  check_order(order);
  // Tr(rho_alpha^K) depends only on |alpha| and equals its value at n - |alpha|.
  std::vector<double> by_size(static_cast<std::size_t>(n + 1), 1.0);
  for (int j = 1; j < n; ++j) {
    const int eff = std::min(j, n - j);
    if (eff < j) {
      by_size[static_cast<std::size_t>(j)] = by_size[static_cast<std::size_t>(eff)];
      continue;
    }
    by_size[static_cast<std::size_t>(j)] =
        trace_power(spin_squeezed_reduced_dm(params, j).as_density_matrix(), order);
  }
  double sum = 0.0;
  for (int j = 0; j <= subset_size; ++j) {
    sum += binomial(subset_size, j) * by_size[static_cast<std::size_t>(j)];
  }
  return (1.0 - std::ldexp(sum, -subset_size)) / (order - 1.0);
}

}  // namespace gcelab
