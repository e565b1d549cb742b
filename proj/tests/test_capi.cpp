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

// Exercises the shared library through its C interface only.

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "isoest/isoest.h"

namespace {

std::string take(char* text) {
  std::string s = text;
  isoest_free_string(text);
  return s;
}

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(isoest_version(), "0.1.0");
  EXPECT_STREQ(isoest_status_name(ISOEST_OK), "ok");
  EXPECT_STREQ(isoest_status_name(ISOEST_BUDGET_EXCEEDED), "budget exceeded");
}

TEST(CApi, DiagramSets) {
  isoest_diagram_set* set = nullptr;
  ASSERT_EQ(isoest_diagrams_enumerate(2, 4, &set), ISOEST_OK);
  EXPECT_EQ(isoest_diagrams_count(set), 3u);
  EXPECT_EQ(isoest_diagrams_row_bound(set), 2);
  int rows[2];
  ASSERT_EQ(isoest_diagrams_get(set, 1, rows, 2), ISOEST_OK);
  EXPECT_EQ(rows[0], 3);
  EXPECT_EQ(rows[1], 1);
  EXPECT_EQ(isoest_diagrams_get(set, 1, rows, 1), ISOEST_BUFFER_TOO_SMALL);
  EXPECT_EQ(isoest_diagrams_get(set, 3, rows, 2), ISOEST_INVALID_ARGUMENT);
  char* text = nullptr;
  ASSERT_EQ(isoest_diagrams_serialize(set, &text), ISOEST_OK);
  EXPECT_EQ(take(text), "d=2 n=4 count=3\n4,0\n3,1\n2,2\n");
  isoest_diagrams_free(set);
  isoest_diagrams_free(nullptr);

  EXPECT_EQ(isoest_diagrams_enumerate(0, 4, &set), ISOEST_INVALID_ARGUMENT);
  EXPECT_NE(std::string(isoest_last_error()), "");
}

TEST(CApi, ExactDimensions) {
  const int rows[] = {100};
  char* text = nullptr;
  ASSERT_EQ(isoest_dim_unitary(rows, 1, 101, &text), ISOEST_OK);
  EXPECT_EQ(take(text), "90548514656103281165404177077484163874504589675413336841320");
  const int ab[] = {2, 1};
  ASSERT_EQ(isoest_count_stab(ab, 2, &text), ISOEST_OK);
  EXPECT_EQ(take(text), "2");
  double l = 0.0;
  ASSERT_EQ(isoest_dim_unitary_log2(ab, 2, 3, &l), ISOEST_OK);
  EXPECT_NEAR(l, 3.0, 1e-14);
  const int bad[] = {1, 2};
  EXPECT_EQ(isoest_count_stab(bad, 2, &text), ISOEST_INVALID_ARGUMENT);
}

TEST(CApi, MatrixAndFidelity) {
  isoest_matrix* m = nullptr;
  ASSERT_EQ(isoest_matrix_build(2, 2, 2, &m), ISOEST_OK);
  EXPECT_EQ(isoest_matrix_size(m), 2u);
  double x = 0.0;
  ASSERT_EQ(isoest_matrix_at(m, 0, 1, &x), ISOEST_OK);
  EXPECT_DOUBLE_EQ(x, 0.25);
  char* text = nullptr;
  ASSERT_EQ(isoest_matrix_dump(m, &text), ISOEST_OK);
  EXPECT_EQ(take(text), "2 2 2 2\n0 0 0.5\n0 1 0.25\n1 1 0.25\n");
  const double v[] = {1.0, 0.0};
  ASSERT_EQ(isoest_matrix_quadratic_form(m, v, 2, &x), ISOEST_OK);
  EXPECT_DOUBLE_EQ(x, 0.5);
  EXPECT_EQ(isoest_matrix_quadratic_form(m, v, 1, &x), ISOEST_INVALID_ARGUMENT);
  isoest_matrix_free(m);

  isoest_fidelity_report* report = nullptr;
  const isoest_power_options options = isoest_power_options_default();
  ASSERT_EQ(isoest_optimal_fidelity(2, 2, 2, &options, &report), ISOEST_OK);
  EXPECT_NEAR(isoest_fidelity_report_value(report), std::pow(std::cos(M_PI / 5), 2), 1e-12);
  double vec[2];
  ASSERT_EQ(isoest_fidelity_report_eigvector(report, vec, 2), ISOEST_OK);
  EXPECT_NEAR(vec[0], 0.850650808352, 1e-10);
  EXPECT_EQ(isoest_fidelity_report_eigvector(report, vec, 1), ISOEST_BUFFER_TOO_SMALL);
  isoest_fidelity_report_free(report);

  isoest_power_options tight = options;
  tight.max_iter = 3;
  EXPECT_EQ(isoest_optimal_fidelity(30, 2, 3, &tight, &report), ISOEST_NOT_CONVERGED);
}

TEST(CApi, ProtocolAndCosts) {
  isoest_protocol_params p;
  int A[2];
  ASSERT_EQ(isoest_partition_params(10, 2, 2, &p, A, 2), ISOEST_OK);
  EXPECT_EQ(p.q, 4);
  EXPECT_EQ(p.r, 0);
  EXPECT_EQ(A[0], 6);
  EXPECT_EQ(isoest_partition_params(10, 2, 20, &p, A, 2), ISOEST_INVALID_ARGUMENT);

  double x = 0.0;
  ASSERT_EQ(isoest_fidelity_upper_bound_protocol(10, 2, 3, 2, &x), ISOEST_OK);
  EXPECT_NEAR(x, 0.675, 1e-12);

  isoest_cost_report cost;
  ASSERT_EQ(isoest_program_cost(ISOEST_STRATEGY_EST, 10, 2, 3, 2, &cost), ISOEST_OK);
  EXPECT_NEAR(cost.cost_bits, std::log2(630.0), 1e-12);
  EXPECT_TRUE(cost.has_epsilon_proxy);
  ASSERT_EQ(isoest_program_cost(ISOEST_STRATEGY_PBT, 10, 2, 3, 2, &cost), ISOEST_OK);
  EXPECT_NEAR(cost.cost_bits, std::log2(1176.0), 1e-12);
  EXPECT_TRUE(cost.has_epsilon_proxy);
  EXPECT_STREQ(isoest_strategy_name(ISOEST_STRATEGY_CPTP), "cptp");

  long q = 0;
  ASSERT_EQ(isoest_query_complexity(2, 2, 0.01, ISOEST_QUERIES_QUANTUM, &q), ISOEST_OK);
  EXPECT_EQ(q, 29);
  ASSERT_EQ(isoest_query_complexity(2, 3, 0.01, ISOEST_QUERIES_CLASSICAL, &q), ISOEST_OK);
  EXPECT_EQ(q, 200);

  const double xs[] = {0, 1, 2};
  const double ys[] = {1, 3, 5};
  double slope = 0.0, intercept = 0.0;
  ASSERT_EQ(isoest_fit_line(xs, ys, 3, &slope, &intercept), ISOEST_OK);
  EXPECT_NEAR(slope, 2.0, 1e-14);
  EXPECT_NEAR(intercept, 1.0, 1e-14);
}

TEST(CApi, ProtocolWeights) {
  isoest_protocol_weights* w = nullptr;
  ASSERT_EQ(isoest_protocol_weights_build(10, 2, 2, &w), ISOEST_OK);
  ASSERT_EQ(isoest_protocol_weights_count(w), 2u);
  double values[2];
  ASSERT_EQ(isoest_protocol_weights_values(w, values, 2), ISOEST_OK);
  EXPECT_NEAR(values[0] * values[0] + values[1] * values[1], 1.0, 1e-12);
  std::vector<double> dense(6);
  ASSERT_EQ(isoest_protocol_weights_dense(w, dense.data(), dense.size()), ISOEST_OK);
  EXPECT_EQ(isoest_protocol_weights_dense(w, dense.data(), 2), ISOEST_BUFFER_TOO_SMALL);
  isoest_protocol_weights_free(w);
}

TEST(CApi, Oracle) {
  isoest_mc_options o = isoest_mc_options_default();
  o.samples = 20'000;
  isoest_oracle_estimate e;
  const double v[] = {1.0};
  ASSERT_EQ(isoest_mc_fidelity(v, 1, 1, 2, 3, &o, &e), ISOEST_OK);
  EXPECT_LE(std::abs(e.mean - 0.3125), 4 * e.std_error);
  EXPECT_EQ(e.samples, 20'000);
  EXPECT_EQ(isoest_mc_fidelity(v, 1, 3, 2, 3, &o, &e), ISOEST_BUDGET_EXCEEDED);

  double r = 1.0;
  ASSERT_EQ(isoest_block_residual(2, 2, 3, 3, 1, &r), ISOEST_OK);
  EXPECT_LE(r, 1e-10);
  ASSERT_EQ(isoest_projector_residual(2, 3, &r), ISOEST_OK);
  EXPECT_LE(r, 1e-10);

  double re[9], im[9];
  size_t dim = 0;
  ASSERT_EQ(isoest_hnks_hamiltonian(0.4, 2, ISOEST_HNKS_UNITARY, 0.0, re, im, 9, &dim),
            ISOEST_OK);
  EXPECT_EQ(dim, 3u);
  EXPECT_NEAR(im[2 * 3 + 1], 1.0, 1e-12);
  EXPECT_NEAR(im[1 * 3 + 2], -1.0, 1e-12);
  EXPECT_EQ(isoest_hnks_hamiltonian(0.4, 2, ISOEST_HNKS_UNITARY, 0.0, re, im, 4, &dim),
            ISOEST_BUFFER_TOO_SMALL);
}

}  // namespace
