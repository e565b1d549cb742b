// Copyright 2026 The isoest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "isoest/error.hpp"
#include "isoest/pbt.hpp"

namespace isoest {
namespace {

double value_of(const PbtWeights& w, const std::vector<int>& rows) {
  const auto idx = w.support_plus.find(YoungDiagram(rows, w.support_plus.d()));
  return idx ? w.values[*idx] : 0.0;
}

TEST(WWeights, Examples) {
  const auto w = w_weights(build_v(10, 2, 2));
  ASSERT_EQ(w.support_plus.size(), 3u);
  EXPECT_NEAR(value_of(w, {7, 4}), std::sqrt(2.0 / 3), 1e-15);
  EXPECT_NEAR(value_of(w, {6, 5}), 1 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(value_of(w, {8, 3}), 1 / std::sqrt(6.0), 1e-15);

  const auto w1 = w_weights(build_v(4, 1, 2));
  ASSERT_EQ(w1.support_plus.size(), 1u);
  EXPECT_EQ(w1.support_plus[0].to_string(), "5");
  EXPECT_DOUBLE_EQ(w1.values[0], 1.0);
}

TEST(WWeights, DeltaOnSingleRow) {
  ProtocolWeights v;
  v.params = ProtocolParams{2, 2, 2, 1, 0, {}};
  v.support = DiagramSet(2, 2, {YoungDiagram({2, 0}, 2)});
  v.values = {1.0};
  const auto w = w_weights(v);
  ASSERT_EQ(w.support_plus.size(), 2u);
  EXPECT_NEAR(value_of(w, {3, 0}), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(value_of(w, {2, 1}), 1 / std::sqrt(2.0), 1e-15);
}

TEST(WWeights, Invariants) {
  for (auto [n, d, N] : std::vector<std::tuple<int, int, int>>{{40, 2, 7}, {60, 3, 3}, {50, 4, 2}}) {
    const auto v = build_v(n, d, N);
    const auto w = w_weights(v);
    double norm2 = 0.0;
    for (std::size_t k = 0; k < w.values.size(); ++k) {
      EXPECT_GT(w.values[k], 0.0);
      norm2 += w.values[k] * w.values[k];
      bool has_parent = false;
      for (const auto& a : remove_box(w.support_plus[k])) has_parent |= v.support.contains(a);
      EXPECT_TRUE(has_parent);
      EXPECT_EQ(w.stab_counts[k], count_stab(w.support_plus[k]));
    }
    EXPECT_NEAR(norm2, 1.0, 1e-12);
  }
}

TEST(PbtCost, Examples) {
  // 4*90 + 2*48 + 6*120 = 1176.
  const auto c = pbt_program_cost(10, 2, 3, 2);
  EXPECT_EQ(c.strategy, Strategy::Pbt);
  EXPECT_NEAR(c.cost_bits, std::log2(1176.0), 1e-12);
  // binomial(n + D, n + 1) = binomial(11, 8) = 165 for n = 7, D = 4.
  EXPECT_NEAR(pbt_program_cost(7, 1, 4, 2).cost_bits, std::log2(165.0), 1e-12);
  EXPECT_NEAR(pbt_program_cost(10, 2, 2, 2).cost_bits, std::log2(56.0), 1e-12);
}

TEST(PbtErrorBound, Examples) {
  EXPECT_NEAR(pbt_error_bound(2, 2), 1 - (3 + std::sqrt(5.0)) / 8, 1e-12);
  EXPECT_EQ(pbt_error_bound(17, 1), 0.0);
  const double e100 = pbt_error_bound(100, 2);
  EXPECT_NEAR(e100, std::numbers::pi * std::numbers::pi / 1e4,
              0.2 * std::numbers::pi * std::numbers::pi / 1e4);
}

TEST(CptpCost, ComposesPbtAtDilatedDimension) {
  const auto c = cptp_cost_bound(2, 2, 10, 2);
  EXPECT_EQ(c.strategy, Strategy::Cptp);
  EXPECT_EQ(c.D, 2);
  EXPECT_DOUBLE_EQ(c.cost_bits, pbt_program_cost(10, 2, 4, 2).cost_bits);
  const auto c1 = cptp_cost_bound(1, 3, 6, 2);
  EXPECT_DOUBLE_EQ(c1.cost_bits, pbt_program_cost(6, 1, 3, 2).cost_bits);
  EXPECT_THROW(cptp_cost_bound(3, 2, 10, 2), InvalidArgument);
}

TEST(QueryComplexity, Classical) {
  EXPECT_EQ(sar_query_complexity(2, 3, 0.01, QueryStrategy::Classical), 200);
  EXPECT_EQ(sar_query_complexity(1, 5, 0.1, QueryStrategy::Classical), 40);
  EXPECT_EQ(sar_query_complexity(1, 2, 0.1, QueryStrategy::Classical), 10);
  EXPECT_EQ(sar_query_complexity(2, 3, 0.03, QueryStrategy::Classical), 67);
  EXPECT_THROW(sar_query_complexity(2, 2, 0.01, QueryStrategy::Classical), InvalidArgument);
  EXPECT_THROW(sar_query_complexity(2, 3, 0.0, QueryStrategy::Classical), InvalidArgument);
}

TEST(QueryComplexity, QuantumIsSmallestSufficientN) {
  // For qubits 1 - F_est(n,2,2) = sin^2(pi/(n+3)), so the answer is the
  // smallest n with sin^2(pi/(n+3)) <= eps.
  for (double eps : {0.2, 0.05, 0.01, 0.003}) {
    long expected = 1;
    while (std::pow(std::sin(std::numbers::pi / (expected + 3)), 2) > eps) ++expected;
    EXPECT_EQ(sar_query_complexity(2, 3, eps, QueryStrategy::Quantum), expected) << eps;
  }
  EXPECT_EQ(sar_query_complexity(2, 3, 0.01, QueryStrategy::Quantum), 29);
  EXPECT_EQ(sar_query_complexity(1, 3, 0.01, QueryStrategy::Quantum), 1);
}

}  // namespace
}  // namespace isoest
