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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "gcelab/robustness.hpp"
#include "oracles.hpp"

namespace gcelab {
namespace {

TEST(Robustness, ElementarySymmetric) {
  const std::vector<double> x{0.1, 0.3, 0.05, 0.2};
  for (int j = 0; j <= 5; ++j) EXPECT_NEAR(elementary_symmetric(x, j), oracle::elementary_symmetric(x, j), 1e-15);
}

TEST(Robustness, BoundFormula) {
  const std::vector<double> eps{0.05, 0.0, 0.0};
  // (2^2 - 1) / (2 * 4) * (e1 + e2 + 2 e3) with e1 = 0.05 and the rest zero.
  EXPECT_NEAR(error_bound(eps, 3, 2), 3.0 / 8.0 * 0.05, 1e-15);
  const std::vector<double> all{0.1, 0.1};
  EXPECT_NEAR(error_bound(all, 2, 1), 0.5 / 1.0 * (0.2 + 2 * 0.01), 1e-15);
  EXPECT_THROW(error_bound(all, 3, 1), std::invalid_argument);
}

TEST(Robustness, ScenarioNoise) {
  const auto one = scenario_noise(Scenario::kOneNoisy, 0.1, 3, 4);
  EXPECT_EQ(one.epsilons, (std::vector<double>{0.1, 0.0, 0.0}));
  const auto all = scenario_noise(Scenario::kAllNoisy, 0.1, 3, 4);
  EXPECT_EQ(all.epsilons, (std::vector<double>{0.1, 0.1, 0.1}));
  EXPECT_EQ(parse_scenario("one"), Scenario::kOneNoisy);
  EXPECT_EQ(parse_scenario("all-noisy"), Scenario::kAllNoisy);
  EXPECT_EQ(scenario_name(Scenario::kOneNoisy), "one-noisy");
  EXPECT_THROW(parse_scenario("some"), std::invalid_argument);
  NoiseSpec bad{{0.1, 1.2}, 0};
  EXPECT_THROW(bad.validate(2), std::invalid_argument);
}

TEST(Robustness, MeasuredErrorMatchesOracle) {
  const PureState psi = haar_random_state(3, 77);
  const NoiseSpec spec{{0.1, 0.05, 0.0}, 1234};
  const GceParams params(3, SubsetLabel({0, 1}));
  const auto m = measured_error(psi, spec, params);

  std::vector<Eigen::VectorXcd> copies;
  for (int k = 0; k < 3; ++k) {
    copies.push_back(perturb_state(psi, spec.epsilons[static_cast<std::size_t>(k)],
                                   derive_seed(spec.seed, {static_cast<std::uint64_t>(k)}))
                         .amplitudes());
  }
  const auto table = oracle::permutation_test(copies, 3);
  // Zero-residue estimator restricted to s = {0, 1}.
  double sum = 0.0;
  for (int mask = 0; mask < 4; ++mask) {
    double zero_mass = 0.0;
    for (const auto& [z, p] : table) {
      const int h = ((mask & 1) ? z[0] : 0) + ((mask & 2) ? z[1] : 0);
      if (h % 3 == 0) zero_mass += p;
    }
    sum += 1.0 - zero_mass;
  }
  const double estimate = 3.0 / (4.0 * 4.0) * sum;
  const double exact = oracle::gce(psi.amplitudes(), 3, {0, 1}, 3.0);
  EXPECT_NEAR(m.measured_error, std::abs(estimate - exact), 1e-12);
  EXPECT_LE(m.measured_error, m.bound);
}

TEST(Robustness, NoiselessCopiesHaveNoError) {
  const PureState psi = haar_random_state(3, 5);
  const auto m = measured_error(psi, NoiseSpec{{0.0, 0.0}, 1}, GceParams(2, SubsetLabel({0, 1})));
  EXPECT_LT(m.measured_error, 1e-12);
  EXPECT_EQ(m.bound, 0.0);
}

TEST(Robustness, SweepDeterministicAcrossThreads) {
  RobustnessConfig cfg;
  cfg.num_qubits = {3};
  cfg.copies = {2, 3};
  cfg.cases = {{Scenario::kAllNoisy, 0.05}, {Scenario::kOneNoisy, 0.1}};
  cfg.samples = 8;
  cfg.seed = 42;
  const auto a = robustness_sweep(cfg);
  cfg.threads = 3;
  const auto b = robustness_sweep(cfg);
  ASSERT_EQ(a.size(), 2U * 2U * 8U);
  std::ostringstream sa, sb;
  write_robustness_csv(sa, a);
  write_robustness_csv(sb, b);
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(sa.str().substr(0, sa.str().find('\n')), "n,K,s_size,scenario,epsilon,sample_index,measured_error,bound");
  for (const auto& r : a) EXPECT_LE(r.measured_error, r.bound + 1e-10);

  const auto cells = summarize(a);
  ASSERT_EQ(cells.size(), 4U);
  for (const auto& c : cells) EXPECT_EQ(c.samples, 8);
}

TEST(Robustness, RejectsCompositeCopies) {
  RobustnessConfig cfg;
  cfg.num_qubits = {3};
  cfg.copies = {4};
  cfg.cases = {{Scenario::kAllNoisy, 0.05}};
  cfg.samples = 1;
  EXPECT_ANY_THROW(robustness_sweep(cfg));
}

}  // namespace
}  // namespace gcelab
