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
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "gcelab/errors.hpp"
#include "gcelab/permutation_test.hpp"
#include "gcelab/states.hpp"
#include "oracles.hpp"

namespace gcelab {
namespace {

std::map<std::vector<int>, double> as_map(const ProbabilityTable& t) {
  std::map<std::vector<int>, double> m;
  for (const auto& e : t.entries()) m[e.digits.digits()] = e.probability;
  return m;
}

double max_diff(const ProbabilityTable& t, const std::map<std::vector<int>, double>& ref) {
  const auto got = as_map(t);
  double worst = 0.0;
  for (const auto& [z, p] : ref) {
    const auto it = got.find(z);
    worst = std::max(worst, std::abs((it == got.end() ? 0.0 : it->second) - p));
  }
  for (const auto& [z, p] : got) {
    if (!ref.contains(z)) worst = std::max(worst, std::abs(p));
  }
  return worst;
}

PureState bell() {
  CVector v = CVector::Zero(4);
  v[0] = v[3] = 1 / std::sqrt(2.0);
  return PureState(2, v);
}

TEST(Primes, Classification) {
  for (int k : {2, 3, 5, 7, 11, 13}) EXPECT_TRUE(is_prime(k));
  for (int k : {0, 1, 4, 6, 8, 9, 15}) EXPECT_FALSE(is_prime(k));
  EXPECT_THROW(require_prime_order(4), UnsupportedOrderError);
  EXPECT_NO_THROW(require_prime_order(5));
}

TEST(CopyPermutation, ShiftAndCycles) {
  const CopyPermutation d(5, 2);
  EXPECT_EQ(d.mapping(), (std::vector<int>{2, 3, 4, 0, 1}));
  EXPECT_EQ(d.pow(3).mapping(), CopyPermutation(5, 1).mapping());
  EXPECT_EQ(CopyPermutation(4, 2).cycles().size(), 2U);
  for (int k : {2, 3, 5, 7}) {
    for (int z = 1; z < k; ++z) EXPECT_TRUE(is_single_cycle(derangement_power(k, z))) << k << ' ' << z;
  }
  for (int k : {4, 6, 8, 9}) {
    bool some_split = false;
    for (int z = 1; z < k; ++z) some_split |= !is_single_cycle(derangement_power(k, z));
    EXPECT_TRUE(some_split) << k;
  }
}

TEST(CopyPermutation, TraceFailsForCompositeOrder) {
  CMatrix r(2, 2);
  r << 0.7, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.3;
  const DensityMatrix rho(r);
  const double tr2 = (r * r).trace().real();
  const double tr4 = (r * r * r * r).trace().real();
  const cplx split = copy_permutation_trace(rho, derangement_power(4, 2));
  EXPECT_NEAR(split.real(), tr2 * tr2, 1e-14);
  EXPECT_GT(std::abs(split - tr4), 1e-6);
  EXPECT_NEAR(std::abs(copy_permutation_trace(rho, derangement_power(4, 1)) - tr4), 0.0, 1e-14);
  const double tr3 = (r * r * r).trace().real();
  for (int z = 1; z < 3; ++z) {
    EXPECT_NEAR(std::abs(copy_permutation_trace(rho, derangement_power(3, z)) - tr3), 0.0, 1e-14);
  }
}

TEST(DigitString, ParseAndResidue) {
  const DigitString z = DigitString::parse(5, "0143");
  EXPECT_EQ(z.to_string(), "0143");
  EXPECT_EQ(z.residue(), 3);
  EXPECT_EQ(z.residue(SubsetLabel({1, 2})), 0);
  EXPECT_THROW(DigitString::parse(3, "013"), ParseError);
}

TEST(ExactTable, BellThreeCopies) {
  const auto t = exact_probability_table(bell(), 3);
  EXPECT_NEAR(t.probability(DigitString::parse(3, "00")), 0.5, 1e-12);
  EXPECT_NEAR(t.probability(DigitString::parse(3, "12")), 0.25, 1e-12);
  EXPECT_NEAR(t.probability(DigitString::parse(3, "21")), 0.25, 1e-12);
  EXPECT_NEAR(estimate_gce(t, GceParams(3, SubsetLabel::all(2))).from_zero_residue, 0.1875, 1e-12);
}

TEST(ExactTable, MatchesCircuitOracle) {
  struct Case {
    int n, k;
  };
  for (const Case c : {Case{1, 2}, Case{2, 2}, Case{2, 3}, Case{3, 3}, Case{1, 5}, Case{2, 5}}) {
    const PureState psi = haar_random_state(c.n, static_cast<std::uint64_t>(100 + c.n * 7 + c.k));
    std::vector<Eigen::VectorXcd> copies(static_cast<std::size_t>(c.k), psi.amplitudes());
    const auto ref = oracle::permutation_test(copies, c.n);
    TableOptions all;
    all.include_off_support = true;
    EXPECT_LT(max_diff(exact_probability_table(psi, c.k, all), ref), 1e-13) << c.n << ' ' << c.k;
    EXPECT_LT(max_diff(exact_probability_table(psi, c.k), ref), 1e-13) << c.n << ' ' << c.k;
  }
}

TEST(ExactTable, DistinctCopiesMatchCircuitOracle) {
  std::vector<PureState> copies{haar_random_state(2, 1), haar_random_state(2, 2), haar_random_state(2, 3)};
  std::vector<Eigen::VectorXcd> amps;
  for (const auto& c : copies) amps.push_back(c.amplitudes());
  const auto t = exact_probability_table(std::span<const PureState>(copies));
  EXPECT_LT(max_diff(t, oracle::permutation_test(amps, 2)), 1e-13);
  EXPECT_GT(t.off_support_mass(), 1e-6);

  const GceParams p(3, SubsetLabel::all(2));
  EXPECT_NEAR(estimate_gce(t, p).from_zero_residue, distinct_copy_gce(copies, p), 1e-12);
}

TEST(ExactTable, SupportAndEstimatorIdentity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PureState psi = haar_random_state(3, seed);
    const auto t = exact_probability_table(psi, 3);
    EXPECT_NEAR(t.residue_mass(SubsetLabel::all(3), 0), 1.0, 1e-10);
    EXPECT_LT(t.off_support_mass(), 1e-12);
    for (const std::vector<int>& a : {std::vector<int>{0}, {0, 2}, {0, 1, 2}}) {
      const auto est = estimate_trace_power(t, SubsetLabel(a));
      const double ref = oracle::subset_trace(psi.amplitudes(), 3, a, 3.0);
      EXPECT_NEAR(est.from_zero_residue, ref, 1e-12);
      EXPECT_NEAR(est.from_nonzero_residue, ref, 1e-12);
    }
    const GceParams p(3, SubsetLabel::all(3));
    const auto g = estimate_gce(t, p);
    const double ref = oracle::gce(psi.amplitudes(), 3, {0, 1, 2}, 3.0);
    EXPECT_NEAR(g.from_zero_residue, ref, 1e-10);
    EXPECT_NEAR(g.from_nonzero_residue, ref, 1e-10);
  }
}

TEST(ExactTable, GuardsAndOrderChecks) {
  EXPECT_THROW(exact_probability_table(haar_random_state(2, 0), 4), UnsupportedOrderError);
  EXPECT_THROW(exact_probability_table(haar_random_state(5, 0), 5), ResourceLimitError);
  const auto t = exact_probability_table(bell(), 3);
  EXPECT_THROW(estimate_gce(t, GceParams(5, SubsetLabel::all(2))), std::invalid_argument);
}

TEST(Table, ValidationAndCsvRoundTrip) {
  EXPECT_THROW(ProbabilityTable(3, 1, {{DigitString::parse(3, "0"), 0.5}}), std::invalid_argument);
  EXPECT_THROW(ProbabilityTable(3, 1, {{DigitString::parse(3, "0"), 1.5}, {DigitString::parse(3, "1"), -0.5}}),
               std::invalid_argument);

  const auto t = exact_probability_table(haar_random_state(2, 9), 3);
  std::stringstream buf;
  t.write_csv(buf);
  EXPECT_EQ(buf.str().substr(0, 18), "digits,probability");
  const auto back = ProbabilityTable::read_csv(buf, 3);
  EXPECT_EQ(total_variation(t, back), 0.0);

  std::stringstream bad("digits,probability\n00,0.5\n1x,0.5\n");
  try {
    ProbabilityTable::read_csv(bad, 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Sampling, DeterministicAndAccurate) {
  const auto t = exact_probability_table(bell(), 3);
  const auto a = sample_table(t, 1000000, 17);
  const auto b = sample_table(t, 1000000, 17);
  EXPECT_EQ(total_variation(a, b), 0.0);
  const double est = estimate_gce(a, GceParams(3, SubsetLabel::all(2))).from_zero_residue;
  // Binomial standard deviation of the estimate is about 3e-4 here.
  EXPECT_LT(std::abs(est - 0.1875), 0.005);
  EXPECT_NEAR(a.total(), 1.0, 1e-12);
}

}  // namespace
}  // namespace gcelab
