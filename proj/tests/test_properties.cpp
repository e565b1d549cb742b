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

// Randomized and exhaustive invariants over the combinatorial and numerical
// layers.

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "isoest/estimation.hpp"
#include "isoest/pbt.hpp"
#include "isoest/protocol.hpp"
#include "isoest/young.hpp"

namespace isoest {
namespace {

BigInt power(int base, int exponent) {
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

TEST(Properties, SchurWeylDimensionCount) {
  for (int d = 1; d <= 4; ++d) {
    for (int n = 0; n <= 12; ++n) {
      BigInt total = 0;
      for (const auto& a : enumerate_diagrams(d, n)) total += dim_unitary(a, d) * count_stab(a);
      EXPECT_EQ(total, power(d, n)) << "d=" << d << " n=" << n;
    }
  }
}

TEST(Properties, SymmetricGroupOrder) {
  // sum over all partitions of n of m_alpha^2 = n!
  BigInt factorial = 1;
  for (int n = 1; n <= 12; ++n) {
    factorial *= n;
    BigInt total = 0;
    for (const auto& a : enumerate_diagrams(n, n)) total += count_stab(a) * count_stab(a);
    EXPECT_EQ(total, factorial) << n;
  }
}

TEST(Properties, TableauRecursionEqualsHookFormula) {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& a : enumerate_diagrams(5, n)) {
      EXPECT_EQ(count_stab_recursive(a), count_stab_hook(a)) << a.to_string();
    }
  }
}

TEST(Properties, Branching) {
  for (int d = 1; d <= 4; ++d) {
    for (int n = 0; n <= 10; ++n) {
      for (const auto& a : enumerate_diagrams(d, n)) {
        // Restriction from S_n to S_{n-1}.
        if (n > 0) {
          BigInt below = 0;
          for (const auto& b : remove_box(a)) below += count_stab(b);
          EXPECT_EQ(below, count_stab(a));
        }
        // Pieri: V_alpha (x) C^m = sum over alpha + box.
        for (int m = d; m <= d + 2; ++m) {
          const YoungDiagram am = a.with_row_bound(m);
          BigInt above = 0;
          for (const auto& b : add_box(am, m)) above += dim_unitary(b, m);
          EXPECT_EQ(above, dim_unitary(am, m) * m) << a.to_string() << " m=" << m;
        }
      }
    }
  }
}

TEST(Properties, DimensionsMonotoneInM) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& a : enumerate_diagrams(3, n)) {
      for (int m = 3; m <= 8; ++m) {
        EXPECT_LT(dim_unitary(a, m), dim_unitary(a, m + 1));
        EXPECT_NEAR(dim_unitary_log2(a, m), log2_exact(dim_unitary(a, m)), 1e-12);
      }
    }
  }
}

TEST(Properties, FidelityMonotoneInQueries) {
  for (auto [d, D] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 5}, {3, 4}}) {
    double previous = 0.0;
    for (int n = 1; n <= 30; ++n) {
      const double f = optimal_fidelity(n, d, D).fidelity;
      EXPECT_GT(f, previous - 1e-12) << d << " " << D << " " << n;
      EXPECT_LE(f, 1.0);
      previous = f;
    }
  }
}

TEST(Properties, FidelityDecreasesWithOutputDimension) {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 15; ++n) {
      double previous = 2.0;
      for (int D = d; D <= d + 4; ++D) {
        const double f = optimal_fidelity(n, d, D).fidelity;
        EXPECT_LT(f, previous + 1e-12);
        previous = f;
      }
    }
  }
}

TEST(Properties, SingleInputDimensionIsPureStateEstimation) {
  for (int n = 1; n <= 20; ++n) {
    for (int D = 1; D <= 6; ++D) {
      EXPECT_NEAR(optimal_fidelity(n, 1, D).fidelity, (n + 1.0) / (n + D), 1e-12);
    }
  }
}

TEST(Properties, PerronVectorDominatesRandomVectors) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto [n, d, D] : std::vector<std::tuple<int, int, int>>{{6, 2, 3}, {5, 3, 4}, {12, 2, 5}}) {
    const auto m = build_m_est(n, d, D);
    const double f = optimal_fidelity(n, d, D).fidelity;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> v(m.size());
      double norm = 0.0;
      for (auto& x : v) {
        x = unit(gen);
        norm += x * x;
      }
      for (auto& x : v) x /= std::sqrt(norm);
      EXPECT_LE(fidelity_of_vector(m, v), f + 1e-12);
    }
  }
}

TEST(Properties, MatrixIsSymmetricAndBoundedByRowSums) {
  for (auto [n, d, D] : std::vector<std::tuple<int, int, int>>{{8, 2, 3}, {7, 3, 3}, {6, 4, 6}}) {
    const auto m = build_m_est(n, d, D);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) EXPECT_EQ(m.at(i, j), m.at(j, i));
    }
    EXPECT_LE(optimal_fidelity(n, d, D).fidelity, m.max_row_sum() + 1e-12);
  }
}

TEST(Properties, ProtocolWeightsAreFeasible) {
  for (int d = 2; d <= 3; ++d) {
    for (int n = 6 * d; n <= 60; n += 7) {
      for (int N = 2; N <= max_admissible_N(n, d); ++N) {
        const auto w = build_v(n, d, N);
        double norm = 0.0;
        for (double x : w.values) {
          EXPECT_GE(x, 0.0);
          norm += x * x;
        }
        EXPECT_NEAR(norm, 1.0, 1e-12);
        EXPECT_EQ(w.support.size(), static_cast<std::size_t>(std::pow(N, d - 1)));
        const double achieved = protocol_fidelity(n, d, d + 1, N);
        EXPECT_LE(achieved, optimal_fidelity(n, d, d + 1).fidelity + 1e-12);
      }
    }
  }
}

TEST(Properties, PbtProgramIsAtLeastTheEstimationProgram) {
  for (auto [n, d, D] : std::vector<std::tuple<int, int, int>>{{20, 2, 3}, {40, 2, 4}, {30, 3, 4}}) {
    for (int N = 2; N <= max_admissible_N(n, d); ++N) {
      EXPECT_GT(pbt_program_cost(n, d, D, N).cost_bits, est_program_cost(n, d, D, N).cost_bits);
    }
  }
}

TEST(Properties, FejerWeightsNormalized) {
  for (int N = 2; N <= 200; ++N) {
    const auto g = g_weights(N);
    double sum = 0.0, overlap = 0.0;
    for (int k = 0; k < N; ++k) {
      sum += g[k];
      if (k + 1 < N) overlap += std::sqrt(g[k] * g[k + 1]);
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_NEAR(1.0 - overlap, epsilon_g(N), 1e-12);
  }
}

}  // namespace
}  // namespace isoest
