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

#include "isoest/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "isoest/error.hpp"
#include "isoest/estimation.hpp"

namespace isoest {

int max_admissible_N(int n, int d) {
  if (d < 1 || n < 0) throw InvalidArgument("max_admissible_N: need d >= 1 and n >= 0");
  if (d == 1) return 1;
  // N <= 2/(3(d-1)) (n/d + d - 2)  <=>  3 d (d-1) N <= 2 (n + d (d-2))
  return (2 * (n + d * (d - 2))) / (3 * d * (d - 1));
}

ProtocolParams partition_params(int n, int d, int N) {
  if (d < 1) throw InvalidArgument("partition_params: d must be >= 1");
  if (n < 1) throw InvalidArgument("partition_params: n must be >= 1");
  if (d == 1) return ProtocolParams{n, 1, 1, n, 0, {}};
  if (N < 2) {
    throw InvalidArgument(fmt::format(
        "partition_params: N >= 2 required (the window weights do not normalize at N = {})", N));
  }
  if (3L * d * (d - 1) * N > 2L * (n + d * (d - 2))) {
    throw InvalidArgument(fmt::format(
        "partition_params: N <= 2/(3(d-1)) (n/d + d - 2) violated (n={}, d={}, N={}; "
        "largest admissible N is {})",
        n, d, N, max_admissible_N(n, d)));
  }
  const long remainder = n - static_cast<long>(d) * (d - 1) / 2 * N;
  if (remainder < 0) {
    throw InvalidArgument(fmt::format(
        "partition_params: q >= 0 violated, n - d(d-1)N/2 = {} is negative", remainder));
  }
  ProtocolParams p{n, d, N, static_cast<int>(remainder / d), static_cast<int>(remainder % d), {}};
  for (int i = 1; i <= d - 1; ++i) p.A.push_back(p.q + (d - i) * N + (i <= p.r ? 1 : 0));
  return p;
}

namespace {

// Calls visit(rows, offsets) for every window offset t in [0, N-1]^{d-1}.
template <typename Visit>
void for_each_window_diagram(const ProtocolParams& p, Visit&& visit) {
  const int d = p.d;
  if (d == 1) {
    visit(std::vector<int>{p.n}, std::vector<int>{});
    return;
  }
  std::vector<int> t(d - 1, 0);
  while (true) {
    std::vector<int> rows(d);
    int used = 0;
    for (int i = 0; i < d - 1; ++i) {
      rows[i] = p.A[i] + t[i];
      used += rows[i];
    }
    rows[d - 1] = p.n - used;
    visit(rows, t);
    int k = d - 2;
    while (k >= 0 && ++t[k] == p.N) t[k--] = 0;
    if (k < 0) break;
  }
}

void check_window_rows(const std::vector<int>& rows) {
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i] <= rows[i + 1]) {
      throw InternalError("window diagram is not strictly decreasing");
    }
  }
  if (rows.back() < 0) throw InternalError("window diagram has a negative last row");
}

}  // namespace

DiagramSet build_s_young(int n, int d, int N) {
  const ProtocolParams p = partition_params(n, d, N);
  std::vector<YoungDiagram> diagrams;
  for_each_window_diagram(p, [&](const std::vector<int>& rows, const std::vector<int>&) {
    check_window_rows(rows);
    diagrams.emplace_back(rows, d);
  });
  return DiagramSet(d, n, std::move(diagrams));
}

std::vector<double> g_weights(int N) {
  if (N < 2) throw InvalidArgument("g_weights: N must be >= 2");
  std::vector<double> g(N);
  for (int k = 0; k < N; ++k) {
    const double s = std::sin(std::numbers::pi * (2 * k + 1) / (2.0 * N));
    g[k] = 2.0 / N * s * s;
  }
  return g;
}

double epsilon_g(int N) {
  if (N < 2) throw InvalidArgument("epsilon_g: N must be >= 2");
  return (N - 1.0) / N * (1.0 - std::cos(std::numbers::pi / N));
}

std::vector<double> ProtocolWeights::dense_over(const DiagramSet& full) const {
  std::vector<double> out(full.size(), 0.0);
  for (std::size_t k = 0; k < support.size(); ++k) {
    auto idx = full.find(support[k]);
    if (!idx) {
      throw InvalidArgument("support diagram " + support[k].to_string() +
                            " is not in the target index space");
    }
    out[*idx] = values[k];
  }
  return out;
}

ProtocolWeights build_v(int n, int d, int N) {
  ProtocolWeights w;
  w.params = partition_params(n, d, N);
  if (d == 1) {
    w.support = DiagramSet(1, n, {YoungDiagram({n}, 1)});
    w.values = {1.0};
    w.g = {1.0};
    w.eps_g = 0.0;
    return w;
  }
  w.g = g_weights(w.params.N);
  w.eps_g = epsilon_g(w.params.N);
  std::vector<YoungDiagram> diagrams;
  std::vector<double> amplitudes;
  for_each_window_diagram(w.params, [&](const std::vector<int>& rows, const std::vector<int>& t) {
    check_window_rows(rows);
    double amp = 1.0;
    for (int k : t) amp *= std::sqrt(w.g[k]);
    diagrams.emplace_back(rows, d);
    amplitudes.push_back(amp);
  });
  w.support = DiagramSet(d, n, diagrams);
  w.values.assign(w.support.size(), 0.0);
  for (std::size_t k = 0; k < diagrams.size(); ++k) w.values[*w.support.find(diagrams[k])] = amplitudes[k];
  return w;
}

double fidelity_lower_bound(int n, int d, int D, int N) {
  check_estimation_params(n, d, D);
  const ProtocolParams p = partition_params(n, d, N);
  if (d == 1) return 1.0 - static_cast<double>(D - 1) / (p.q + 1 + D - 1);
  const double window = std::numbers::pi * std::numbers::pi * (d - 1.0) * (d - 1.0) /
                        (static_cast<double>(d) * d * p.N * p.N);
  const double spread = static_cast<double>(D - d) /
                        (static_cast<double>(n) / d - (d - 1.0) * p.N / 2.0 + D - d);
  return 1.0 - window - spread;
}

double fidelity_upper_bound_protocol(int n, int d, int D, int N) {
  check_estimation_params(n, d, D);
  const ProtocolParams p = partition_params(n, d, N);
  const double eps = d == 1 ? 0.0 : epsilon_g(p.N);
  const double f = f_weight(p.q + (d - 1.0) * p.N, d, D);
  const double dd = static_cast<double>(d) * d;
  return f * f * (1.0 - 2.0 * (d - 1.0) * (d - 1.0) / dd * eps + (d - 1.0) * (d - 2.0) / dd * eps * eps);
}

double protocol_fidelity(int n, int d, int D, int N) {
  const SparseSymMatrix m = build_m_est(n, d, D);
  const ProtocolWeights w = build_v(n, d, N);
  return fidelity_of_vector(m, w.dense_over(m.diagram_set()));
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Estimation:
      return "est";
    case Strategy::Pbt:
      return "pbt";
    case Strategy::Cptp:
      return "cptp";
  }
  return "unknown";
}

CostReport est_program_cost(int n, int d, int D, int N) {
  check_estimation_params(n, d, D);
  const DiagramSet support = build_s_young(n, d, N);
  BigInt total = 0;
  for (const auto& alpha : support) total += dim_unitary(alpha, d) * dim_unitary(alpha, D);
  CostReport report;
  report.strategy = Strategy::Estimation;
  report.n = n;
  report.d = d;
  report.D = D;
  report.N = partition_params(n, d, N).N;
  report.cost_bits = log2_exact(total);
  report.epsilon_proxy = 1.0 - protocol_fidelity(n, d, D, N);
  return report;
}

double h_exponent(double t, int d, int D) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("h_exponent: t must lie in [0, 1]");
  if (d < 1 || D < d) throw InvalidArgument("h_exponent: need 1 <= d <= D");
  const double unitary = d * d - 1.0;
  const double spread = static_cast<double>(d) * (D - d);
  if (t <= 0.5) {
    if (t == 0.0) return spread > 0.0 ? std::numeric_limits<double>::infinity() : unitary / 2.0;
    return (t * unitary + spread) / (2.0 * t);
  }
  return t * unitary + spread;
}

int optimal_schedule_N(int n, int d, int D) {
  if (d < 2 || D <= d) throw InvalidArgument("optimal_schedule_N: need d >= 2 and D > d");
  const double a = std::cbrt(2.0 * std::numbers::pi * std::numbers::pi * (d - 1.0) /
                             (std::pow(static_cast<double>(d), 3) * (D - d)));
  const double b = (d - 1.0) * a * a / 6.0;
  return static_cast<int>(std::floor(a * std::cbrt(static_cast<double>(n) * n) + b * std::cbrt(n)));
}

int power_schedule_N(int n, double t) {
  if (n < 1 || !(t >= 0.0 && t <= 1.0)) throw InvalidArgument("power_schedule_N: need n >= 1 and t in [0, 1]");
  const int N = static_cast<int>(std::floor(std::pow(static_cast<double>(n), t) + 1e-9));
  return std::max(N, 2);
}

}  // namespace isoest
