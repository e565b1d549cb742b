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
#include <tuple>
#include <vector>

#include "isoest/error.hpp"
#include "isoest/estimation.hpp"
#include "isoest/protocol.hpp"

namespace isoest {
namespace {

std::vector<std::string> labels(const DiagramSet& s) {
  std::vector<std::string> out;
  for (const auto& a : s) out.push_back(a.to_string());
  return out;
}

TEST(PartitionParams, Examples) {
  const auto p = partition_params(10, 2, 2);
  EXPECT_EQ(p.q, 4);
  EXPECT_EQ(p.r, 0);
  EXPECT_EQ(p.A, std::vector<int>{6});

  const auto p9 = partition_params(9, 2, 2);
  EXPECT_EQ(p9.q, 3);
  EXPECT_EQ(p9.r, 1);
  EXPECT_EQ(p9.A, std::vector<int>{6});

  const auto p1 = partition_params(13, 1, 99);
  EXPECT_EQ(p1.q, 13);
  EXPECT_EQ(p1.r, 0);
  EXPECT_TRUE(p1.A.empty());
}

TEST(PartitionParams, DivisionIdentity) {
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 80; ++n) {
      for (int N = 2; N <= max_admissible_N(n, d); ++N) {
        const auto p = partition_params(n, d, N);
        EXPECT_EQ(n - d * (d - 1) / 2 * N, d * p.q + p.r);
        EXPECT_GE(p.r, 0);
        EXPECT_LT(p.r, d);
        EXPECT_GE(p.q, 0);
        for (int i = 1; i < d; ++i) {
          EXPECT_EQ(p.A[i - 1], p.q + (d - i) * N + (i <= p.r ? 1 : 0));
        }
      }
    }
  }
}

TEST(PartitionParams, ErrorsNameTheInequality) {
  EXPECT_THROW(partition_params(10, 2, 1), InvalidArgument);
  try {
    partition_params(10, 2, 5);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("N <= 2/(3(d-1))"), std::string::npos) << e.what();
  }
}

TEST(MaxAdmissibleN, MatchesInequality) {
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 200; ++n) {
      const int N = max_admissible_N(n, d);
      const double bound = 2.0 / (3.0 * (d - 1)) * (static_cast<double>(n) / d + d - 2);
      EXPECT_LE(N, bound + 1e-12);
      EXPECT_GT(N + 1, bound - 1e-12);
    }
  }
}

TEST(SYoung, Examples) {
  EXPECT_EQ(labels(build_s_young(10, 2, 2)), (std::vector<std::string>{"7,3", "6,4"}));
  EXPECT_EQ(labels(build_s_young(9, 2, 2)), (std::vector<std::string>{"7,2", "6,3"}));
  EXPECT_EQ(labels(build_s_young(5, 1, 3)), (std::vector<std::string>{"5"}));
}

TEST(SYoung, SupportValidity) {
  for (auto [n, d, N] : std::vector<std::tuple<int, int, int>>{{60, 3, 3}, {120, 2, 9}, {90, 4, 2}}) {
    const auto s = build_s_young(n, d, N);
    EXPECT_EQ(s.size(), static_cast<std::size_t>(std::pow(N, d - 1)));
    const auto all = enumerate_diagrams(d, n);
    for (const auto& a : s) {
      EXPECT_TRUE(all.contains(a));
      for (int i = 0; i + 1 < d; ++i) EXPECT_GT(a[i], a[i + 1]);
    }
  }
}

TEST(GWeights, Examples) {
  const auto g2 = g_weights(2);
  EXPECT_NEAR(g2[0], 0.5, 1e-15);
  EXPECT_NEAR(g2[1], 0.5, 1e-15);
  const auto g3 = g_weights(3);
  EXPECT_NEAR(g3[0], 1.0 / 6, 1e-15);
  EXPECT_NEAR(g3[1], 2.0 / 3, 1e-15);
  EXPECT_NEAR(g3[2], 1.0 / 6, 1e-15);
  EXPECT_THROW(g_weights(1), InvalidArgument);
  for (int N = 2; N <= 50; ++N) {
    const auto g = g_weights(N);
    double sum = 0.0;
    for (int k = 0; k < N; ++k) {
      sum += g[k];
      EXPECT_NEAR(g[k], g[N - 1 - k], 1e-15);
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(EpsilonG, ExamplesAndTelescoping) {
  EXPECT_NEAR(epsilon_g(2), 0.5, 1e-15);
  EXPECT_NEAR(epsilon_g(3), 1.0 / 3, 1e-15);
  EXPECT_NEAR(epsilon_g(5), 0.15278640450004205, 1e-15);
  EXPECT_THROW(epsilon_g(1), InvalidArgument);
  for (int N = 2; N <= 200; ++N) {
    const auto g = g_weights(N);
    double overlap = 0.0;
    for (int k = 0; k + 1 < N; ++k) overlap += std::sqrt(g[k] * g[k + 1]);
    EXPECT_NEAR(epsilon_g(N), 1.0 - overlap, 1e-12) << N;
    EXPECT_LE(epsilon_g(N), std::numbers::pi * std::numbers::pi / (2.0 * N * N));
  }
}

TEST(BuildV, Examples) {
  const auto w = build_v(10, 2, 2);
  ASSERT_EQ(w.values.size(), 2u);
  EXPECT_NEAR(w.values[0], 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(w.values[1], 1 / std::sqrt(2.0), 1e-15);

  const auto w1 = build_v(7, 1, 4);
  ASSERT_EQ(w1.values.size(), 1u);
  EXPECT_EQ(w1.values[0], 1.0);

  const auto w12 = build_v(12, 2, 3);
  ASSERT_EQ(w12.values.size(), 3u);
  std::vector<double> sorted = w12.values;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_NEAR(sorted[0], std::sqrt(1.0 / 6), 1e-15);
  EXPECT_NEAR(sorted[1], std::sqrt(1.0 / 6), 1e-15);
  EXPECT_NEAR(sorted[2], std::sqrt(2.0 / 3), 1e-15);
}

TEST(BuildV, DenseOverFullSet) {
  const auto w = build_v(30, 3, 3);
  const auto dense = w.dense_over(enumerate_diagrams(3, 30));
  double norm2 = 0.0;
  for (double x : dense) norm2 += x * x;
  EXPECT_NEAR(norm2, 1.0, 1e-12);
  EXPECT_THROW(w.dense_over(enumerate_diagrams(3, 29)), InvalidArgument);
}

TEST(Bounds, Examples) {
  EXPECT_NEAR(fidelity_lower_bound(10, 2, 3, 2),
              1 - std::numbers::pi * std::numbers::pi / 16 - 0.2, 1e-15);
  for (int N : {2, 3, 4}) {
    EXPECT_NEAR(fidelity_lower_bound(30, 2, 2, N),
                1 - std::numbers::pi * std::numbers::pi / (4.0 * N * N), 1e-15);
  }
  // q + (d-1)N = 4 + 2 = 6, f(6)^2 = 9/10, eps_g(2) = 1/2.
  EXPECT_NEAR(fidelity_upper_bound_protocol(10, 2, 3, 2), 0.9 * 0.75, 1e-15);
  // d = 1: [f(q)]^2 with q = n.
  EXPECT_NEAR(fidelity_upper_bound_protocol(9, 1, 3, 2), 11.0 / 13.0, 1e-15);
}

// Reference values from an independent numpy implementation of the protocol
// weights and the dense matrix.
TEST(ProtocolFidelity, MatchesReference) {
  const std::vector<std::tuple<int, int, int, int, double, double, double>> cases = {
      {10, 2, 3, 2, 0.6385962884556697, 0.18314972493191511, 0.6749999999999999},
      {30, 2, 3, 5, 0.8637100708171616, 0.8272298819150323, 0.8796255216666468},
      {60, 3, 4, 3, 0.6944780100351778, 0.45705657278571077, 0.7023809523809524},
      {120, 2, 4, 9, 0.9416877558767123, 0.9347556493256769, 0.944988119759458},
  };
  for (const auto& [n, d, D, N, achieved, lower, upper] : cases) {
    EXPECT_NEAR(protocol_fidelity(n, d, D, N), achieved, 1e-12);
    EXPECT_NEAR(fidelity_lower_bound(n, d, D, N), lower, 1e-12);
    EXPECT_NEAR(fidelity_upper_bound_protocol(n, d, D, N), upper, 1e-12);
  }
}

TEST(EstCost, Examples) {
  const auto c = est_program_cost(10, 2, 3, 2);
  EXPECT_EQ(c.strategy, Strategy::Estimation);
  EXPECT_NEAR(c.cost_bits, std::log2(630.0), 1e-12);
  ASSERT_TRUE(c.epsilon_proxy.has_value());
  EXPECT_NEAR(*c.epsilon_proxy, 1 - 0.6385962884556697, 1e-12);

  // d = 1: binomial(n + D - 1, n) = binomial(12, 8) = 495.
  EXPECT_NEAR(est_program_cost(8, 1, 5, 2).cost_bits, std::log2(495.0), 1e-12);
  EXPECT_NEAR(est_program_cost(10, 2, 2, 2).cost_bits, std::log2(34.0), 1e-12);
}

TEST(HExponent, Examples) {
  EXPECT_DOUBLE_EQ(h_exponent(0.5, 2, 3), 3.5);
  EXPECT_DOUBLE_EQ(h_exponent(1.0, 2, 3), 5.0);
  for (int d = 1; d <= 5; ++d) EXPECT_DOUBLE_EQ(h_exponent(0.5, d, d), (d * d - 1) / 2.0);
  EXPECT_THROW(h_exponent(1.5, 2, 3), InvalidArgument);
  EXPECT_TRUE(std::isinf(h_exponent(0.0, 2, 3)));
}

TEST(HExponent, MinimizedAtOneHalf) {
  for (auto [d, D] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {4, 7}}) {
    const double best = h_exponent(0.5, d, D);
    EXPECT_DOUBLE_EQ(best, (2.0 * D * d - d * d - 1) / 2.0);
    for (int k = 1; k <= 1000; ++k) EXPECT_GE(h_exponent(k / 1000.0, d, D), best - 1e-12);
  }
}

TEST(Schedules, Values) {
  EXPECT_EQ(power_schedule_N(100, 0.5), 10);
  EXPECT_EQ(power_schedule_N(99, 0.5), 9);
  EXPECT_EQ(power_schedule_N(3, 0.5), 2);
  // a = (2 pi^2 / 8)^(1/3), b = a^2 / 6 at (d, D) = (2, 3).
  const double a = std::cbrt(2 * std::numbers::pi * std::numbers::pi / 8);
  const double b = a * a / 6;
  EXPECT_EQ(optimal_schedule_N(200, 2, 3),
            static_cast<int>(std::floor(a * std::cbrt(200.0 * 200.0) + b * std::cbrt(200.0))));
  EXPECT_THROW(optimal_schedule_N(200, 2, 2), InvalidArgument);
}

}  // namespace
}  // namespace isoest
