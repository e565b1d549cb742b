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

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "isoest/error.hpp"
#include "isoest/oracle.hpp"

namespace isoest::oracle {

namespace {

void check_permutation(const Permutation& sigma) {
  std::vector<char> seen(sigma.size(), 0);
  for (int k : sigma) {
    if (k < 0 || static_cast<std::size_t>(k) >= sigma.size() || seen[k]) {
      throw InvalidArgument("not a permutation");
    }
    seen[k] = 1;
  }
}

long long int_pow(int base, int exp) {
  long long p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

// Murnaghan-Nakayama on beta-numbers: removing a rim hook of length k moves
// one bead from b to b - k; the sign counts the beads jumped over.
long long mn_character(std::vector<int>& beta, const std::vector<int>& parts,
                       std::size_t idx) {
  if (idx == parts.size()) return 1;
  const int k = parts[idx];
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int c : beta) {
      if (c > target && c < b) ++between;
    }
    beta[i] = target;
    const long long rest = mn_character(beta, parts, idx + 1);
    beta[i] = b;
    total += (between % 2 == 0) ? rest : -rest;
  }
  return total;
}

void tableaux_dfs(const YoungDiagram& alpha, int next, int n,
                  std::vector<std::vector<int>>& current,
                  std::vector<std::vector<std::vector<int>>>& out) {
  if (next == n) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = 0; i < current.size(); ++i) {
    const auto len = static_cast<int>(current[i].size());
    if (len >= alpha[i]) continue;
    if (i > 0 && static_cast<int>(current[i - 1].size()) <= len) continue;
    current[i].push_back(next);
    tableaux_dfs(alpha, next + 1, n, current, out);
    current[i].pop_back();
  }
}

// Permutations that map every block of `blocks` onto itself.
std::vector<Permutation> stabilizer(const std::vector<std::vector<int>>& blocks, int n) {
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int e : blocks[b]) block_of[e] = static_cast<int>(b);
  }
  std::vector<Permutation> out;
  for (auto& sigma : all_permutations(n)) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) ok = block_of[sigma[k]] == block_of[k];
    if (ok) out.push_back(std::move(sigma));
  }
  return out;
}

}  // namespace

std::vector<Permutation> all_permutations(int n) {
  if (n < 0) throw InvalidArgument("permutation degree must be nonnegative");
  Permutation sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw InvalidArgument("permutation degrees differ");
  Permutation out(sigma.size());
  for (std::size_t k = 0; k < tau.size(); ++k) out[k] = sigma[tau[k]];
  return out;
}

Permutation inverse(const Permutation& sigma) {
  check_permutation(sigma);
  Permutation out(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) out[sigma[k]] = static_cast<int>(k);
  return out;
}

std::vector<int> cycle_type(const Permutation& sigma) {
  check_permutation(sigma);
  std::vector<char> seen(sigma.size(), 0);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t k = start; !seen[k]; k = sigma[k]) {
      seen[k] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int sign(const Permutation& sigma) {
  int transpositions = 0;
  for (int len : cycle_type(sigma)) transpositions += len - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

RMatrix permutation_op(const Permutation& sigma, int d) {
  check_permutation(sigma);
  if (d < 1) throw InvalidArgument("local dimension must be positive");
  const int n = static_cast<int>(sigma.size());
  const long long dim = int_pow(d, n);
  RMatrix p = RMatrix::Zero(dim, dim);
  std::vector<int> digits(n), moved(n);
  for (long long in = 0; in < dim; ++in) {
    long long rest = in;
    for (int k = n - 1; k >= 0; --k) {
      digits[k] = static_cast<int>(rest % d);
      rest /= d;
    }
    for (int k = 0; k < n; ++k) moved[sigma[k]] = digits[k];
    long long out = 0;
    for (int k = 0; k < n; ++k) out = out * d + moved[k];
    p(out, in) = 1.0;
  }
  return p;
}

long long character(const YoungDiagram& alpha, const std::vector<int>& type) {
  const int total = std::accumulate(type.begin(), type.end(), 0);
  if (total != alpha.n()) {
    throw InvalidArgument(fmt::format("cycle type sums to {} but the diagram has {} boxes",
                                      total, alpha.n()));
  }
  const int len = alpha.d();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = alpha[i] + (len - 1 - i);
  return mn_character(beta, type, 0);
}

std::vector<std::vector<std::vector<int>>> standard_tableaux(const YoungDiagram& alpha) {
  std::vector<std::vector<int>> current(alpha.length());
  std::vector<std::vector<std::vector<int>>> out;
  tableaux_dfs(alpha, 0, alpha.n(), current, out);
  return out;
}

RMatrix young_symmetrizer(const std::vector<std::vector<int>>& tableau, int n, int d) {
  std::vector<std::vector<int>> columns;
  for (const auto& row : tableau) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (columns.size() <= j) columns.emplace_back();
      columns[j].push_back(row[j]);
    }
  }
  const long long dim = int_pow(d, n);
  RMatrix a = RMatrix::Zero(dim, dim);
  for (const auto& p : stabilizer(tableau, n)) a += permutation_op(p, d);
  RMatrix b = RMatrix::Zero(dim, dim);
  for (const auto& q : stabilizer(columns, n)) b += sign(q) * permutation_op(q, d);
  return b * a;
}

}  // namespace isoest::oracle
