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

#include "isoest/pbt.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "isoest/error.hpp"

namespace isoest {

PbtWeights w_weights(const ProtocolWeights& v) {
  const int d = v.support.d();
  std::map<YoungDiagram, double> sums;
  for (std::size_t k = 0; k < v.support.size(); ++k) {
    if (v.values[k] == 0.0) continue;
    for (const auto& mu : add_box(v.support[k])) sums[mu] += v.values[k];
  }
  double norm2 = 0.0;
  for (const auto& [mu, s] : sums) norm2 += s * s;
  if (norm2 <= 0.0) throw InvalidArgument("w_weights: protocol weights are identically zero");

  PbtWeights out;
  out.base = v;
  std::vector<YoungDiagram> diagrams;
  for (const auto& [mu, s] : sums) diagrams.push_back(mu);
  out.support_plus = DiagramSet(d, v.support.n() + 1, std::move(diagrams));
  const double norm = std::sqrt(norm2);
  for (const auto& mu : out.support_plus) {
    out.values.push_back(sums.at(mu) / norm);
    out.stab_counts.push_back(count_stab(mu));
  }
  return out;
}

double pbt_error_bound(int n, int d, const PowerIterationOptions& options) {
  check_estimation_params(n, d, d);
  const FidelityReport report = optimal_fidelity(n, d, d, options);
  return std::max(0.0, 1.0 - report.fidelity);
}

CostReport pbt_program_cost(int n, int d, int D, int N, const PowerIterationOptions& options) {
  check_estimation_params(n, d, D);
  const PbtWeights w = w_weights(build_v(n, d, N));
  BigInt total = 0;
  for (const auto& mu : w.support_plus) total += dim_unitary(mu, d) * dim_unitary(mu, D);
  CostReport report;
  report.strategy = Strategy::Pbt;
  report.n = n;
  report.d = d;
  report.D = D;
  report.N = w.base.params.N;
  report.cost_bits = log2_exact(total);
  report.epsilon_proxy = pbt_error_bound(n, d, options);
  return report;
}

CostReport cptp_cost_bound(int d, int D, int n, int N, const PowerIterationOptions& options) {
  if (d < 1 || D < d) throw InvalidArgument("cptp_cost_bound: need 1 <= d <= D");
  CostReport report = pbt_program_cost(n, d, D * d, N, options);
  report.strategy = Strategy::Cptp;
  report.D = D;
  return report;
}

long sar_query_complexity(int d, int D, double eps, QueryStrategy strategy,
                          const PowerIterationOptions& options) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("sar_query_complexity: eps must lie in (0, 1)");
  if (d < 1 || D < d) throw InvalidArgument("sar_query_complexity: need 1 <= d <= D");
  if (strategy == QueryStrategy::Classical) {
    if (D == d) {
      throw InvalidArgument(
          "sar_query_complexity: the classical isometry formula needs D > d "
          "(at D = d the estimation-based strategy is not SQL-limited)");
    }
    const double raw = static_cast<double>(d) * (D - d) / eps;
    // Absorb representation error of eps (2 / 0.01 must give 200, not 201).
    return static_cast<long>(std::ceil(raw * (1.0 - 1e-12)));
  }

  auto reached = [&](long n) { return pbt_error_bound(static_cast<int>(n), d, options) <= eps; };
  constexpr long kLimit = 1L << 16;
  long hi = 1;
  while (!reached(hi)) {
    if (hi >= kLimit) {
      throw BudgetExceeded(fmt::format("sar_query_complexity: eps={:g} needs more than {} queries", eps, kLimit));
    }
    hi *= 2;
  }
  long lo = hi / 2;  // fails (or 0)
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (reached(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace isoest
