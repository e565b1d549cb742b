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

// Optimal isometry-estimation fidelity as the Perron eigenvalue of the
// nonnegative matrix M_est(n, d, D) indexed by Y_{d,n}.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "isoest/young.hpp"

namespace isoest {

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  double value;
};

/// Symmetric nonnegative sparse matrix stored as its upper triangle
/// (row <= col), sorted row-major, over a DiagramSet index space.
class SparseSymMatrix {
 public:
  SparseSymMatrix(DiagramSet diagrams, std::vector<MatrixEntry> upper);

  std::size_t size() const noexcept { return diagrams_.size(); }
  const DiagramSet& diagram_set() const noexcept { return diagrams_; }
  std::span<const MatrixEntry> entries() const noexcept { return upper_; }

  double at(std::size_t row, std::size_t col) const;

  /// y = M x.
  void multiply(std::span<const double> x, std::span<double> y) const;

  /// Maximum row sum (Perron-Frobenius upper bound on the top eigenvalue).
  double max_row_sum() const;

  /// Connected components of the sparsity graph, each sorted ascending.
  std::vector<std::vector<std::size_t>> components() const;

  /// Principal submatrix on `indices` (sorted), reindexed 0..k-1. The diagram
  /// set of the result is the corresponding subset.
  SparseSymMatrix restrict_to(std::span<const std::size_t> indices) const;

 private:
  DiagramSet diagrams_;
  std::vector<MatrixEntry> upper_;
};

/// f(x) = sqrt((x + d + 1) / (x + D + 1)).
double f_weight(double x, int d, int D);

SparseSymMatrix build_m_est(int n, int d, int D);

/// Matrix dump: header "n d D size", then "i j value" per stored entry
/// (row <= col, row-major) with 17 significant digits.
std::string dump_matrix(const SparseSymMatrix& m, int n, int d, int D);

struct PowerIterationOptions {
  double tol = 1e-12;
  long max_iter = 1'000'000;
};

struct PerronResult {
  double eigenvalue = 0.0;
  std::vector<double> eigvector;
  long iterations = 0;
  double residual = 0.0;
};

/// Dominant eigenpair of a nonnegative symmetric matrix by power iteration
/// from the uniform positive vector, solved per connected component. Throws
/// NotConverged when max_iter is exhausted.
PerronResult perron_max(const SparseSymMatrix& m,
                        const PowerIterationOptions& options = {});

struct FidelityReport {
  int n = 0;
  int d = 0;
  int D = 0;
  double fidelity = 0.0;
  std::vector<double> eigvector;
  long iterations = 0;
  double residual = 0.0;
  double rowsum_bound = 0.0;
  double jensen_bound = 0.0;
  DiagramSet diagrams = DiagramSet(1, 0, {});
};

FidelityReport optimal_fidelity(int n, int d, int D,
                                const PowerIterationOptions& options = {});

/// v^T M v. Throws InvalidArgument on a size mismatch.
double fidelity_of_vector(const SparseSymMatrix& m, std::span<const double> v);

/// [f(n/d - (d+1)/2)]^2, the Jensen-type closed-form upper bound.
double upper_bound_rowsum(int n, int d, int D);

/// Parameter validation shared by the estimation-side operations.
void check_estimation_params(int n, int d, int D);

}  // namespace isoest
