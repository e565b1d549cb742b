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

#include "isoest/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

#include <fmt/format.h>

#include "isoest/error.hpp"

namespace isoest {

SparseSymMatrix::SparseSymMatrix(DiagramSet diagrams, std::vector<MatrixEntry> upper)
    : diagrams_(std::move(diagrams)), upper_(std::move(upper)) {
  std::sort(upper_.begin(), upper_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return std::pair(a.row, a.col) < std::pair(b.row, b.col);
  });
  for (std::size_t k = 0; k < upper_.size(); ++k) {
    const auto& e = upper_[k];
    if (e.row > e.col || e.col >= size()) {
      throw InvalidArgument("matrix entry outside the upper triangle");
    }
    if (!(e.value >= 0.0)) throw InvalidArgument("matrix entries must be nonnegative");
    if (k > 0 && upper_[k - 1].row == e.row && upper_[k - 1].col == e.col) {
      throw InvalidArgument("duplicate matrix entry");
    }
  }
}

double SparseSymMatrix::at(std::size_t row, std::size_t col) const {
  if (row > col) std::swap(row, col);
  auto it = std::lower_bound(upper_.begin(), upper_.end(), std::pair(row, col),
                             [](const MatrixEntry& e, const std::pair<std::size_t, std::size_t>& key) {
                               return std::pair(e.row, e.col) < key;
                             });
  if (it != upper_.end() && it->row == row && it->col == col) return it->value;
  return 0.0;
}

void SparseSymMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != size() || y.size() != size()) {
    throw InvalidArgument("multiply: vector length does not match matrix size");
  }
  std::fill(y.begin(), y.end(), 0.0);
  for (const auto& e : upper_) {
    y[e.row] += e.value * x[e.col];
    if (e.row != e.col) y[e.col] += e.value * x[e.row];
  }
}

double SparseSymMatrix::max_row_sum() const {
  std::vector<double> sums(size(), 0.0);
  for (const auto& e : upper_) {
    sums[e.row] += e.value;
    if (e.row != e.col) sums[e.col] += e.value;
  }
  return sums.empty() ? 0.0 : *std::max_element(sums.begin(), sums.end());
}

std::vector<std::vector<std::size_t>> SparseSymMatrix::components() const {
  std::vector<std::size_t> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : upper_) {
    const auto a = root(e.row);
    const auto b = root(e.col);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < size(); ++v) groups[root(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, members] : groups) out.push_back(std::move(members));
  return out;
}

SparseSymMatrix SparseSymMatrix::restrict_to(std::span<const std::size_t> indices) const {
  std::map<std::size_t, std::size_t> position;
  std::vector<YoungDiagram> subset;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    position[indices[k]] = k;
    subset.push_back(diagrams_[indices[k]]);
  }
  // Indices are ascending and the parent order is descending lexicographic,
  // so the subset keeps the same relative order after DiagramSet sorts it.
  std::vector<MatrixEntry> entries;
  for (const auto& e : upper_) {
    auto r = position.find(e.row);
    auto c = position.find(e.col);
    if (r != position.end() && c != position.end()) {
      entries.push_back({r->second, c->second, e.value});
    }
  }
  return SparseSymMatrix(DiagramSet(diagrams_.d(), diagrams_.n(), std::move(subset)),
                         std::move(entries));
}

void check_estimation_params(int n, int d, int D) {
  if (d < 1) throw InvalidArgument("d must be >= 1");
  if (D < d) throw InvalidArgument("D must be >= d (an isometry needs output dimension >= input dimension)");
  if (n < 1) throw InvalidArgument("n must be >= 1");
}

double f_weight(double x, int d, int D) {
  if (d < 1) throw InvalidArgument("f_weight: d must be >= 1");
  if (D < d) throw InvalidArgument("f_weight: D must be >= d");
  if (x < -d) throw InvalidArgument("f_weight: argument must be >= -d");
  return std::sqrt((x + d + 1) / (x + D + 1));
}

SparseSymMatrix build_m_est(int n, int d, int D) {
  check_estimation_params(n, d, D);
  DiagramSet diagrams = DiagramSet::enumerate(d, n);

  // Group the predecessors of every mu in Y_{d,n+1}: entry (alpha, beta)
  // collects f(alpha_i - i) f(beta_j - j) whenever alpha + e_i = beta + e_j.
  std::map<std::vector<int>, std::vector<std::pair<std::size_t, double>>> parents;
  for (std::size_t a = 0; a < diagrams.size(); ++a) {
    const auto& alpha = diagrams[a];
    for (int i = 0; i < d; ++i) {
      if (i > 0 && alpha[i] + 1 > alpha[i - 1]) continue;
      std::vector<int> mu(alpha.rows().begin(), alpha.rows().end());
      ++mu[i];
      const double weight = f_weight(alpha[i] - (i + 1), d, D);
      parents[std::move(mu)].emplace_back(a, weight);
    }
  }

  const double scale = 1.0 / (static_cast<double>(d) * d);
  std::map<std::pair<std::size_t, std::size_t>, double> acc;
  for (const auto& [mu, preds] : parents) {
    for (const auto& [a, fa] : preds) {
      for (const auto& [b, fb] : preds) {
        if (a <= b) acc[{a, b}] += scale * fa * fb;
      }
    }
  }
  std::vector<MatrixEntry> entries;
  entries.reserve(acc.size());
  for (const auto& [key, value] : acc) entries.push_back({key.first, key.second, value});
  return SparseSymMatrix(std::move(diagrams), std::move(entries));
}

std::string dump_matrix(const SparseSymMatrix& m, int n, int d, int D) {
  std::string out = fmt::format("{} {} {} {}\n", n, d, D, m.size());
  for (const auto& e : m.entries()) {
    out += fmt::format("{} {} {:.17g}\n", e.row, e.col, e.value);
  }
  return out;
}

namespace {

PerronResult power_iteration(const SparseSymMatrix& m, const PowerIterationOptions& options) {
  const std::size_t k = m.size();
  std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k)));
  std::vector<double> y(k);
  double residual = 0.0;
  for (long iter = 1; iter <= options.max_iter; ++iter) {
    m.multiply(x, y);
    const double lambda = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    if (lambda <= 0.0) return PerronResult{0.0, x, iter, 0.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < k; ++i) worst = std::max(worst, std::abs(y[i] - lambda * x[i]));
    residual = worst / lambda;
    if (residual <= options.tol) return PerronResult{lambda, x, iter, residual};
    const double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / norm;
  }
  throw NotConverged(fmt::format("power iteration did not reach tol={:g} after {} iterations "
                                 "(last residual {:.3e})",
                                 options.tol, options.max_iter, residual),
                     residual);
}

}  // namespace

PerronResult perron_max(const SparseSymMatrix& m, const PowerIterationOptions& options) {
  if (m.size() == 0) throw InvalidArgument("perron_max: empty matrix");
  if (options.tol <= 0.0 || options.max_iter < 1) {
    throw InvalidArgument("perron_max: tol must be > 0 and max_iter >= 1");
  }
  const auto parts = m.components();
  if (parts.size() == 1) return power_iteration(m, options);

  PerronResult best;
  bool have = false;
  long total_iterations = 0;
  for (const auto& part : parts) {
    PerronResult local = power_iteration(m.restrict_to(part), options);
    total_iterations += local.iterations;
    if (!have || local.eigenvalue > best.eigenvalue) {
      best.eigenvalue = local.eigenvalue;
      best.residual = local.residual;
      best.eigvector.assign(m.size(), 0.0);
      for (std::size_t k = 0; k < part.size(); ++k) best.eigvector[part[k]] = local.eigvector[k];
      have = true;
    }
  }
  best.iterations = total_iterations;
  return best;
}

FidelityReport optimal_fidelity(int n, int d, int D, const PowerIterationOptions& options) {
  SparseSymMatrix m = build_m_est(n, d, D);
  PerronResult perron = perron_max(m, options);
  FidelityReport report{.n = n,
                        .d = d,
                        .D = D,
                        .fidelity = perron.eigenvalue,
                        .eigvector = std::move(perron.eigvector),
                        .iterations = perron.iterations,
                        .residual = perron.residual,
                        .rowsum_bound = m.max_row_sum(),
                        .jensen_bound = upper_bound_rowsum(n, d, D),
                        .diagrams = m.diagram_set()};
  return report;
}

double fidelity_of_vector(const SparseSymMatrix& m, std::span<const double> v) {
  if (v.size() != m.size()) {
    throw InvalidArgument(fmt::format("fidelity_of_vector: vector has {} entries, matrix is {}x{}",
                                      v.size(), m.size(), m.size()));
  }
  std::vector<double> mv(v.size());
  m.multiply(v, mv);
  return std::inner_product(v.begin(), v.end(), mv.begin(), 0.0);
}

double upper_bound_rowsum(int n, int d, int D) {
  check_estimation_params(n, d, D);
  const double x = static_cast<double>(n) / d - (d + 1) / 2.0;
  const double f = f_weight(x, d, D);
  return f * f;
}

}  // namespace isoest
