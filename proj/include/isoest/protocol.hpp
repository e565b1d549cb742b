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

// Explicit parallel estimation protocol supported on a window of Young
// diagrams with Fejer-type weights, its fidelity bounds, and the program cost
// of the estimation-based storage-and-retrieval strategy.

#include <optional>
#include <string_view>
#include <vector>

#include "isoest/young.hpp"

namespace isoest {

/// Window parameters: n - d(d-1)N/2 = d q + r with 0 <= r < d, and row
/// offsets A_i = q + (d-i)N + [i <= r] for i = 1..d-1.
struct ProtocolParams {
  int n = 0;
  int d = 0;
  int N = 0;
  int q = 0;
  int r = 0;
  std::vector<int> A;
};

/// Largest admissible window width floor(2/(3(d-1)) (n/d + d - 2)) for d >= 2.
int max_admissible_N(int n, int d);

/// Throws InvalidArgument naming the violated inequality. For d = 1, N is
/// ignored and the trivial parameters q = n, r = 0, A = {} are returned.
ProtocolParams partition_params(int n, int d, int N);

/// S_Young: the N^{d-1} diagrams alpha_i = A_i + t_i (t_i in 0..N-1) for
/// i < d, with the last row fixed by the total n.
DiagramSet build_s_young(int n, int d, int N);

/// g_k = (2/N) sin^2(pi (2k+1) / 2N), k = 0..N-1. Requires N >= 2.
std::vector<double> g_weights(int N);

/// (N-1)/N (1 - cos(pi/N)) = 1 - sum_k sqrt(g_k g_{k+1}).
double epsilon_g(int N);

struct ProtocolWeights {
  ProtocolParams params;
  DiagramSet support = DiagramSet(1, 0, {});
  std::vector<double> values;  // aligned with support
  std::vector<double> g;
  double eps_g = 0.0;

  /// Weights scattered onto an arbitrary superset index space (zeros
  /// elsewhere). Throws if a support diagram is missing from `full`.
  std::vector<double> dense_over(const DiagramSet& full) const;
};

ProtocolWeights build_v(int n, int d, int N);

/// 1 - pi^2 (d-1)^2 / (d^2 N^2) - (D-d) / (n/d - (d-1)N/2 + D - d).
double fidelity_lower_bound(int n, int d, int D, int N);

/// [f(q + (d-1)N)]^2 [1 - 2(d-1)^2/d^2 eps_g + (d-1)(d-2)/d^2 eps_g^2].
double fidelity_upper_bound_protocol(int n, int d, int D, int N);

/// Achieved fidelity v^T M_est v of build_v(n, d, N).
double protocol_fidelity(int n, int d, int D, int N);

enum class Strategy { Estimation, Pbt, Cptp };

std::string_view strategy_name(Strategy s);

struct CostReport {
  Strategy strategy = Strategy::Estimation;
  int n = 0;
  int d = 0;
  int D = 0;
  int N = 0;
  double cost_bits = 0.0;
  std::optional<double> epsilon_proxy;
};

/// log2 sum_{alpha in S_Young} d_alpha^(d) d_alpha^(D), with
/// epsilon_proxy = 1 - protocol_fidelity.
CostReport est_program_cost(int n, int d, int D, int N);

/// Exponent h(t) of the estimation-based cost for a window N = Theta(n^t).
double h_exponent(double t, int d, int D);

/// Window from the asymptotically optimal schedule
/// floor(a n^{2/3} + b n^{1/3}), a = (2 pi^2 (d-1) / (d^3 (D-d)))^{1/3},
/// b = (d-1) a^2 / 6. Requires D > d and d >= 2.
int optimal_schedule_N(int n, int d, int D);

/// floor(n^t), clamped below at 2.
int power_schedule_N(int n, double t);

}  // namespace isoest
