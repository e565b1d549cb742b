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

#include "isoest/young.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>

#include "isoest/error.hpp"

namespace isoest {

double log2_exact(const BigInt& value) {
  if (value <= 0) throw InvalidArgument("log2_exact: value must be positive");
  const auto top_bit = boost::multiprecision::msb(value);
  if (top_bit < 62) return std::log2(value.convert_to<double>());
  const auto shift = top_bit - 61;
  const auto head = static_cast<std::uint64_t>(value >> shift);
  return std::log2(static_cast<double>(head)) + static_cast<double>(shift);
}

YoungDiagram::YoungDiagram(std::vector<int> rows, int d) : rows_(std::move(rows)) {
  if (d < 1) throw InvalidArgument("row bound d must be >= 1");
  while (static_cast<int>(rows_.size()) > d && rows_.back() == 0) rows_.pop_back();
  if (static_cast<int>(rows_.size()) > d) {
    throw InvalidArgument("diagram has more than d=" + std::to_string(d) +
                          " nonzero rows");
  }
  rows_.resize(d, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw InvalidArgument("row lengths must be non-negative");
    if (i > 0 && rows_[i] > rows_[i - 1]) {
      throw InvalidArgument("row lengths must be weakly decreasing");
    }
    n_ += rows_[i];
  }
}

int YoungDiagram::length() const noexcept {
  return static_cast<int>(
      std::count_if(rows_.begin(), rows_.end(), [](int r) { return r > 0; }));
}

YoungDiagram YoungDiagram::with_row_bound(int d) const {
  return YoungDiagram(rows_, d);
}

std::string YoungDiagram::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rows_[i]);
  }
  return out;
}

YoungDiagram YoungDiagram::parse(const std::string& text, int d) {
  std::vector<int> rows;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      rows.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse diagram '" + text + "'");
    }
  }
  return YoungDiagram(std::move(rows), d);
}

DiagramSet::DiagramSet(int d, int n, std::vector<YoungDiagram> diagrams)
    : d_(d), n_(n), diagrams_(std::move(diagrams)) {
  std::sort(diagrams_.begin(), diagrams_.end(), std::greater<>());
  for (std::size_t i = 0; i < diagrams_.size(); ++i) {
    const auto& a = diagrams_[i];
    if (a.d() != d || a.n() != n) {
      throw InvalidArgument("diagram " + a.to_string() + " is not in Y_{" +
                            std::to_string(d) + "," + std::to_string(n) + "}");
    }
    auto [it, inserted] =
        index_.emplace(std::vector<int>(a.rows().begin(), a.rows().end()), i);
    if (!inserted) throw InvalidArgument("duplicate diagram " + a.to_string());
  }
}

DiagramSet DiagramSet::enumerate(int d, int n) {
  if (d < 1) throw InvalidArgument("enumerate_diagrams: d must be >= 1");
  if (n < 0) throw InvalidArgument("enumerate_diagrams: n must be >= 0");
  std::vector<YoungDiagram> out;
  std::vector<int> rows(d, 0);
  // Fill rows left to right; each row bounded by the previous one. Visiting
  // larger values first yields descending lexicographic order directly.
  std::function<void(int, int, int)> fill = [&](int row, int remaining, int cap) {
    if (row == d - 1) {
      if (remaining <= cap) {
        rows[row] = remaining;
        out.emplace_back(rows, d);
      }
      return;
    }
    for (int v = std::min(remaining, cap); v >= 0; --v) {
      if (v * (d - row) < remaining) break;
      rows[row] = v;
      fill(row + 1, remaining - v, v);
    }
  };
  fill(0, n, n);
  return DiagramSet(d, n, std::move(out));
}

std::optional<std::size_t> DiagramSet::find(const YoungDiagram& alpha) const {
  if (alpha.d() != d_ || alpha.n() != n_) return std::nullopt;
  auto it = index_.find(std::vector<int>(alpha.rows().begin(), alpha.rows().end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string DiagramSet::serialize() const {
  std::string out = "d=" + std::to_string(d_) + " n=" + std::to_string(n_) +
                    " count=" + std::to_string(diagrams_.size()) + "\n";
  for (const auto& a : diagrams_) {
    out += a.to_string();
    out += '\n';
  }
  return out;
}

DiagramSet enumerate_diagrams(int d, int n) { return DiagramSet::enumerate(d, n); }

std::vector<YoungDiagram> add_box(const YoungDiagram& alpha) {
  std::vector<YoungDiagram> out;
  std::vector<int> rows(alpha.rows().begin(), alpha.rows().end());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i] + 1 > rows[i - 1]) continue;
    ++rows[i];
    out.emplace_back(rows, alpha.d());
    --rows[i];
  }
  return out;
}

std::vector<YoungDiagram> add_box(const YoungDiagram& alpha, int d) {
  return add_box(alpha.with_row_bound(d));
}

std::vector<YoungDiagram> remove_box(const YoungDiagram& alpha) {
  std::vector<YoungDiagram> out;
  std::vector<int> rows(alpha.rows().begin(), alpha.rows().end());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == 0) continue;
    if (i + 1 < rows.size() && rows[i] - 1 < rows[i + 1]) continue;
    --rows[i];
    out.emplace_back(rows, alpha.d());
    ++rows[i];
  }
  return out;
}

namespace {

std::vector<int> padded(const YoungDiagram& alpha, int m) {
  if (alpha.length() > m) {
    throw InvalidArgument("diagram " + alpha.to_string() + " has more than " +
                          std::to_string(m) +
                          " nonzero rows; the U(m) dimension would be 0");
  }
  std::vector<int> rows(alpha.rows().begin(), alpha.rows().end());
  rows.resize(m, 0);
  return rows;
}

}  // namespace

BigInt dim_unitary(const YoungDiagram& alpha, int m) {
  if (m < 1) throw InvalidArgument("dim_unitary: m must be >= 1");
  const auto a = padded(alpha, m);
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      num *= a[i] - a[j] - i + j;
      den *= j - i;
    }
  }
  if (num % den != 0) throw InternalError("Weyl formula gave a non-integer");
  return num / den;
}

double dim_unitary_log2(const YoungDiagram& alpha, int m) {
  if (m < 1) throw InvalidArgument("dim_unitary_log2: m must be >= 1");
  const auto a = padded(alpha, m);
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      acc += std::log2(static_cast<double>(a[i] - a[j] - i + j)) -
             std::log2(static_cast<double>(j - i));
    }
  }
  return acc;
}

BigInt count_stab_recursive(const YoungDiagram& alpha) {
  std::map<std::vector<int>, BigInt> memo;
  std::function<BigInt(const YoungDiagram&)> count = [&](const YoungDiagram& a) -> BigInt {
    if (a.n() <= 1) return 1;
    std::vector<int> key(a.rows().begin(), a.rows().end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (const auto& b : remove_box(a)) total += count(b);
    memo.emplace(std::move(key), total);
    return total;
  };
  return count(alpha);
}

BigInt count_stab_hook(const YoungDiagram& alpha) {
  const int len = alpha.length();
  BigInt factorial = 1;
  for (int k = 2; k <= alpha.n(); ++k) factorial *= k;
  BigInt hooks = 1;
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < alpha[i]; ++j) {
      int below = 0;
      for (int k = i + 1; k < len && alpha[k] > j; ++k) ++below;
      hooks *= (alpha[i] - j - 1) + below + 1;
    }
  }
  return factorial / hooks;
}

BigInt count_stab(const YoungDiagram& alpha) {
  BigInt recursive = count_stab_recursive(alpha);
  if (recursive != count_stab_hook(alpha)) {
    throw InternalError("standard tableaux count mismatch for " + alpha.to_string());
  }
  return recursive;
}

DimensionRecord dimension_record(const YoungDiagram& alpha, int m) {
  BigInt dim = dim_unitary(alpha, m);
  const double lg = dim_unitary_log2(alpha, m);
  return DimensionRecord{alpha, m, dim, lg, count_stab(alpha)};
}

}  // namespace isoest
