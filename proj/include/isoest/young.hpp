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

// Young diagram combinatorics: enumeration of Y_{d,n}, single-box moves,
// unitary irrep dimensions (Weyl formula) and standard-tableaux counts.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace isoest {

using BigInt = boost::multiprecision::cpp_int;

// log2 of a positive exact integer, accurate to double precision.
double log2_exact(const BigInt& value);

/// A partition of n into at most d parts, stored padded with zeros to
/// exactly d rows.
class YoungDiagram {
 public:
  /// Validates monotonicity and pads `rows` with zeros up to `d` entries.
  /// Throws InvalidArgument when rows are negative, increasing, or when more
  /// than `d` rows are nonzero.
  YoungDiagram(std::vector<int> rows, int d);

  int d() const noexcept { return static_cast<int>(rows_.size()); }
  int n() const noexcept { return n_; }
  std::span<const int> rows() const noexcept { return rows_; }
  int operator[](std::size_t i) const { return rows_[i]; }

  /// Number of nonzero rows.
  int length() const noexcept;

  /// Same shape with a different row bound (must be >= length()).
  YoungDiagram with_row_bound(int d) const;

  /// Comma-joined row lengths, e.g. "6,4".
  std::string to_string() const;

  /// Parses the comma-joined form produced by to_string().
  static YoungDiagram parse(const std::string& text, int d);

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend std::strong_ordering operator<=>(const YoungDiagram& a,
                                          const YoungDiagram& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<int> rows_;
  int n_ = 0;
};

/// Canonically ordered (descending lexicographic) set of diagrams sharing the
/// same d and n.
class DiagramSet {
 public:
  DiagramSet(int d, int n, std::vector<YoungDiagram> diagrams);

  /// All of Y_{d,n}.
  static DiagramSet enumerate(int d, int n);

  int d() const noexcept { return d_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return diagrams_.size(); }
  const YoungDiagram& operator[](std::size_t i) const { return diagrams_[i]; }
  auto begin() const noexcept { return diagrams_.begin(); }
  auto end() const noexcept { return diagrams_.end(); }

  std::optional<std::size_t> find(const YoungDiagram& alpha) const;
  bool contains(const YoungDiagram& alpha) const {
    return find(alpha).has_value();
  }

  /// Header "d=<d> n=<n> count=<k>" followed by one diagram per line.
  std::string serialize() const;

 private:
  int d_;
  int n_;
  std::vector<YoungDiagram> diagrams_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// enumerate_diagrams(d, n); same as DiagramSet::enumerate.
DiagramSet enumerate_diagrams(int d, int n);

/// alpha + e_i for i = 1..d that remain valid, in row order (which is also
/// descending lexicographic order).
std::vector<YoungDiagram> add_box(const YoungDiagram& alpha);
std::vector<YoungDiagram> add_box(const YoungDiagram& alpha, int d);

/// alpha - e_i for i = 1..d that remain valid, in row order.
std::vector<YoungDiagram> remove_box(const YoungDiagram& alpha);

/// Weyl dimension of the U(m) irrep labelled by alpha. Throws
/// InvalidArgument if alpha has more than m nonzero rows.
BigInt dim_unitary(const YoungDiagram& alpha, int m);
double dim_unitary_log2(const YoungDiagram& alpha, int m);

/// Number of standard tableaux of shape alpha. Computed by the branching
/// recursion and by the hook-length formula; throws InternalError if the two
/// disagree.
BigInt count_stab(const YoungDiagram& alpha);
BigInt count_stab_recursive(const YoungDiagram& alpha);
BigInt count_stab_hook(const YoungDiagram& alpha);

struct DimensionRecord {
  YoungDiagram diagram;
  int group_dim;
  BigInt dim_unitary;
  double log2_dim;
  BigInt stab_count;
};

DimensionRecord dimension_record(const YoungDiagram& alpha, int m);

}  // namespace isoest
