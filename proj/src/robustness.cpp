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

#include "gcelab/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "gcelab/io.hpp"
#include "gcelab/parallel.hpp"
#include "gcelab/permutation_test.hpp"

namespace gcelab {

double elementary_symmetric(std::span<const double> x, int j) {
  if (j < 0) throw std::invalid_argument("elementary symmetric degree must be >= 0");
  // e[k] after processing a prefix of x.
  std::vector<double> e(static_cast<std::size_t>(j) + 1, 0.0);
  e[0] = 1.0;
  for (double v : x) {
    for (int k = j; k >= 1; --k) e[static_cast<std::size_t>(k)] += v * e[static_cast<std::size_t>(k - 1)];
  }
  return e[static_cast<std::size_t>(j)];
}

double error_bound(std::span<const double> epsilons, int copies, int subset_size) {
  if (copies < 2) throw std::invalid_argument("copy count K must be >= 2");
  if (static_cast<int>(epsilons.size()) != copies) {
    throw std::invalid_argument("need exactly K = " + std::to_string(copies) + " epsilons, got " +
                                std::to_string(epsilons.size()));
  }
  if (subset_size < 1) throw std::invalid_argument("subset size must be >= 1");
  double sum = 0.0;
  for (int j = 1; j < copies; ++j) sum += elementary_symmetric(epsilons, j);
  sum += 2.0 * elementary_symmetric(epsilons, copies);
  const double pow2 = std::ldexp(1.0, subset_size);
  return (pow2 - 1.0) / ((copies - 1.0) * pow2) * sum;
}

void NoiseSpec::validate(int copies) const {
  if (static_cast<int>(epsilons.size()) != copies) {
    throw std::invalid_argument("noise spec has " + std::to_string(epsilons.size()) + " epsilons for " +
                                std::to_string(copies) + " copies");
  }
  for (double e : epsilons) {
    if (!(e >= 0.0 && e <= 1.0)) throw std::invalid_argument("each epsilon must lie in [0, 1]");
  }
}

std::string scenario_name(Scenario scenario) {
  return scenario == Scenario::kAllNoisy ? "all-noisy" : "one-noisy";
}

Scenario parse_scenario(const std::string& text) {
  if (text == "all-noisy" || text == "all") return Scenario::kAllNoisy;
  if (text == "one-noisy" || text == "one") return Scenario::kOneNoisy;
  throw std::invalid_argument("unknown scenario '" + text + "' (expected all-noisy or one-noisy)");
}

NoiseSpec scenario_noise(Scenario scenario, double epsilon, int copies, std::uint64_t seed) {
  NoiseSpec spec{std::vector<double>(static_cast<std::size_t>(copies), 0.0), seed};
  if (scenario == Scenario::kAllNoisy) {
    std::fill(spec.epsilons.begin(), spec.epsilons.end(), epsilon);
  } else {
    spec.epsilons[0] = epsilon;
  }
  spec.validate(copies);
  return spec;
}

ErrorMeasurement measured_error(const PureState& psi, const NoiseSpec& spec, const GceParams& params) {
  const int k = static_cast<int>(std::lround(params.order));
  if (std::abs(params.order - k) > 1e-12) throw std::invalid_argument("copy count must be an integer");
  require_prime_order(k);
  spec.validate(k);
  std::vector<PureState> copies;
  copies.reserve(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    const double eps = spec.epsilons[static_cast<std::size_t>(c)];
    if (eps == 0.0) {
      copies.push_back(psi);
    } else {
      copies.push_back(perturb_state(psi, eps, derive_seed(spec.seed, {static_cast<std::uint64_t>(c)})));
    }
  }
  const double e = std::abs(distinct_copy_gce(copies, params) - gce(psi, params));
  const double bound = error_bound(spec.epsilons, k, static_cast<int>(params.subset.size()));
  if (e > bound + 1e-10) {
    throw std::logic_error("measured error " + format_double(e) + " exceeds the bound " + format_double(bound));
  }
  return {e, bound};
}

std::vector<RobustnessRow> robustness_sweep(const RobustnessConfig& config) {
  if (config.samples < 0) throw std::invalid_argument("sample count must be >= 0");
  for (int k : config.copies) require_prime_order(k);
  for (int n : config.num_qubits) {
    if (n < config.subset_size || n < 1) {
      throw std::invalid_argument("subset size exceeds the qubit count n = " + std::to_string(n));
    }
  }
  std::vector<RobustnessRow> rows;
  for (int n : config.num_qubits) {
    for (int k : config.copies) {
      for (const auto& c : config.cases) {
        for (int i = 0; i < config.samples; ++i) {
          rows.push_back({n, k, config.subset_size, c.scenario, c.epsilon, i, 0.0, 0.0});
        }
      }
    }
  }
  std::vector<int> all;
  for (int q = 0; q < config.subset_size; ++q) all.push_back(q);
  const SubsetLabel subset(all);

  const std::size_t per_k = config.cases.size() * static_cast<std::size_t>(config.samples);
  parallel_for(rows.size(), config.threads, [&](std::size_t idx) {
    RobustnessRow& row = rows[idx];
    const std::size_t case_index = (idx % per_k) / static_cast<std::size_t>(config.samples);
    const auto n = static_cast<std::uint64_t>(row.n);
    const auto i = static_cast<std::uint64_t>(row.sample_index);
    const PureState psi = haar_random_state(row.n, derive_seed(config.seed, {n, i}));
    const NoiseSpec spec = scenario_noise(
        row.scenario, row.epsilon, row.copies,
        derive_seed(config.seed, {n, static_cast<std::uint64_t>(row.copies), case_index, i}));
    const auto m = measured_error(psi, spec, GceParams(row.copies, subset));
    row.measured_error = m.measured_error;
    row.bound = m.bound;
  });
  return rows;
}

std::vector<RobustnessSummary> summarize(const std::vector<RobustnessRow>& rows) {
  std::vector<RobustnessSummary> out;
  for (const auto& r : rows) {
    const bool same_cell = !out.empty() && out.back().n == r.n && out.back().copies == r.copies &&
                           out.back().subset_size == r.subset_size && out.back().scenario == r.scenario &&
                           out.back().epsilon == r.epsilon;
    if (!same_cell) out.push_back({r.n, r.copies, r.subset_size, r.scenario, r.epsilon, 0, 0.0, 0.0, r.bound});
    auto& s = out.back();
    ++s.samples;
    s.mean_error += r.measured_error;
    s.max_error = std::max(s.max_error, r.measured_error);
    s.bound = std::max(s.bound, r.bound);
  }
  for (auto& s : out) s.mean_error /= s.samples;
  return out;
}

void write_robustness_csv(std::ostream& out, const std::vector<RobustnessRow>& rows) {
  out << "n,K,s_size,scenario,epsilon,sample_index,measured_error,bound\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.copies << ',' << r.subset_size << ',' << scenario_name(r.scenario) << ','
        << format_double(r.epsilon) << ',' << r.sample_index << ',' << format_double(r.measured_error) << ','
        << format_double(r.bound) << '\n';
  }
}

}  // namespace gcelab
