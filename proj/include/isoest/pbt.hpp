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

#pragma once

// Port-based-teleportation strategy: resource-state coefficients w_mu, the
// resulting program cost, the CPTP extension, and query complexities.

#include <vector>

#include "isoest/estimation.hpp"
#include "isoest/protocol.hpp"

namespace isoest {

struct PbtWeights {
  ProtocolWeights base;
  DiagramSet support_plus = DiagramSet(1, 0, {});  // S_Young + box, canonical order
  std::vector<double> values;                      // w_mu, aligned with support_plus
  std::vector<BigInt> stab_counts;                 // m_mu, aligned with support_plus
};

/// w_mu proportional to the sum of v_alpha over alpha in mu - box,
/// normalized to unit Euclidean norm.
PbtWeights w_weights(const ProtocolWeights& v);

/// log2 sum_{mu in S_Young + box} d_mu^(d) d_mu^(D), with epsilon_proxy set
/// to pbt_error_bound(n, d).
CostReport pbt_program_cost(int n, int d, int D, int N,
                            const PowerIterationOptions& options = {});

/// 1 - F_est(n, d, d): teleportation error reachable from the unitary
/// estimation protocol, hence a retrieval error of the PBT-based strategy.
double pbt_error_bound(int n, int d, const PowerIterationOptions& options = {});

/// PBT program cost for the Stinespring isometry d -> D*d.
CostReport cptp_cost_bound(int d, int D, int n, int N,
                           const PowerIterationOptions& options = {});

enum class QueryStrategy { Classical, Quantum };

/// Classical: ceil(d(D-d)/eps) (requires D > d). Quantum: smallest n with
/// pbt_error_bound(n, d) <= eps, by doubling then bisection.
long sar_query_complexity(int d, int D, double eps, QueryStrategy strategy,
                          const PowerIterationOptions& options = {});

}  // namespace isoest
