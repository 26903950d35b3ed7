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

// Sensitivity of the GCE estimator to imperfect copies.
//
// When copy k is replaced by a state at trace distance eps_k from psi, the
// estimate moves by at most
//
//   (2^|s| - 1) / ((K-1) 2^|s|) * (e_1 + e_2 + ... + e_{K-1} + 2 e_K),
//
// where e_j is the j-th elementary symmetric polynomial of the eps_k.

#ifndef GCELAB_ROBUSTNESS_HPP
#define GCELAB_ROBUSTNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gcelab/gce_oracle.hpp"
#include "gcelab/quantum_core.hpp"

namespace gcelab {

/// e_j(x_1, ..., x_m); e_0 = 1 and e_j = 0 for j > m.
double elementary_symmetric(std::span<const double> x, int j);

double error_bound(std::span<const double> epsilons, int copies, int subset_size);

struct NoiseSpec {
  std::vector<double> epsilons;  // one per copy
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless there are `copies` values in [0, 1].
  void validate(int copies) const;
};

enum class Scenario { kAllNoisy, kOneNoisy };

std::string scenario_name(Scenario scenario);  // "all-noisy" | "one-noisy"
Scenario parse_scenario(const std::string& text);  // also accepts "all", "one"

/// Noise spec of a scenario: every copy at eps, or copy 0 at eps and the
/// rest exact.
NoiseSpec scenario_noise(Scenario scenario, double epsilon, int copies, std::uint64_t seed);

struct ErrorMeasurement {
  double measured_error;
  double bound;
};

/// Perturbs copy k by eps_k (copy k uses the stream derive_seed(spec.seed, {k})),
/// evaluates the distinct-copy GCE and compares with gce(psi). Throws
/// std::logic_error if the error exceeds the bound by more than 1e-10.
ErrorMeasurement measured_error(const PureState& psi, const NoiseSpec& spec, const GceParams& params);

struct NoiseCase {
  Scenario scenario;
  double epsilon;
};

struct RobustnessConfig {
  std::vector<int> num_qubits;
  std::vector<int> copies;
  std::vector<NoiseCase> cases;
  int subset_size = 2;  // s = {0, ..., subset_size-1}
  int samples = 200;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct RobustnessRow {
  int n;
  int copies;
  int subset_size;
  Scenario scenario;
  double epsilon;
  int sample_index;
  double measured_error;
  double bound;
};

/// Rows ordered by (n, K, case, sample). Sample i of size n uses the Haar state
/// derive_seed(seed, {n, i}) for every K and case, so cells are paired;
/// the noise stream is derive_seed(seed, {n, K, case index, i}).
std::vector<RobustnessRow> robustness_sweep(const RobustnessConfig& config);

struct RobustnessSummary {
  int n;
  int copies;
  int subset_size;
  Scenario scenario;
  double epsilon;
  int samples;
  double mean_error;
  double max_error;
  double bound;
};

/// One summary per grid cell, in row order.
std::vector<RobustnessSummary> summarize(const std::vector<RobustnessRow>& rows);

/// Columns n,K,s_size,scenario,epsilon,sample_index,measured_error,bound.
void write_robustness_csv(std::ostream& out, const std::vector<RobustnessRow>& rows);

}  // namespace gcelab

#endif  // GCELAB_ROBUSTNESS_HPP
