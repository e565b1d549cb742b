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

#include <cmath>

#include <fmt/format.h>

#include "isoest/error.hpp"
#include "isoest/oracle.hpp"

namespace isoest::oracle {

namespace {

void check_projector_scale(int n, const OracleLimits& limits) {
  if (n < 1) throw InvalidArgument("oracle needs n >= 1");
  if (n > limits.max_n_projector) {
    throw BudgetExceeded(fmt::format("n = {} exceeds the projector-algebra limit {}", n,
                                     limits.max_n_projector));
  }
}

long long to_ll(const BigInt& x) { return x.convert_to<long long>(); }

// Orthonormal basis of the column span of `m` and its numerical rank.
RMatrix column_span(const RMatrix& m) {
  Eigen::JacobiSVD<RMatrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cutoff = (s.size() > 0 ? s(0) : 0.0) * 1e-9;
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace

RMatrix isotypic_projector(const YoungDiagram& alpha, int d, const OracleLimits& limits) {
  const int n = alpha.n();
  check_projector_scale(n, limits);
  if (d < 1) throw InvalidArgument("local dimension must be positive");
  long long dim = 1;
  for (int k = 0; k < n; ++k) dim *= d;
  if (alpha.length() > d) return RMatrix::Zero(dim, dim);

  const auto perms = all_permutations(n);
  RMatrix p = RMatrix::Zero(dim, dim);
  for (const auto& sigma : perms) {
    const long long chi = character(alpha, cycle_type(sigma));
    if (chi != 0) p += static_cast<double>(chi) * permutation_op(sigma, d);
  }
  const double scale = static_cast<double>(to_ll(count_stab(alpha))) /
                       static_cast<double>(perms.size());
  return scale * p;
}

SchurBasis schur_block_basis(int d, int n, const std::vector<int>& arb_tableau,
                             const OracleLimits& limits) {
  check_projector_scale(n, limits);
  const DiagramSet diagrams = enumerate_diagrams(d, n);
  if (!arb_tableau.empty() && arb_tableau.size() != diagrams.size()) {
    throw InvalidArgument(fmt::format("arb_tableau needs one entry per diagram ({})",
                                      diagrams.size()));
  }
  SchurBasis basis{d, n, {}};
  for (std::size_t k = 0; k < diagrams.size(); ++k) {
    const YoungDiagram& alpha = diagrams[k];
    const auto tableaux = standard_tableaux(alpha);
    const int arb = arb_tableau.empty() ? 0 : arb_tableau[k];
    if (arb < 0 || static_cast<std::size_t>(arb) >= tableaux.size()) {
      throw InvalidArgument(fmt::format("diagram ({}) has {} standard tableaux; index {} "
                                        "is out of range",
                                        alpha.to_string(), tableaux.size(), arb));
    }

    SchurBlock block{alpha, to_ll(dim_unitary(alpha, d)), to_ll(count_stab(alpha)), {}, {}};
    std::vector<RMatrix> symmetrizers;
    Eigen::Index cols = 0;
    for (const auto& t : tableaux) {
      symmetrizers.push_back(young_symmetrizer(t, n, d));
      cols += symmetrizers.back().cols();
    }
    RMatrix stacked(symmetrizers.front().rows(), cols);
    Eigen::Index at = 0;
    for (const auto& e : symmetrizers) {
      stacked.middleCols(at, e.cols()) = e;
      at += e.cols();
    }

    const RMatrix span = column_span(stacked);
    if (span.cols() != block.dim_unitary * block.multiplicity) {
      throw InternalError(fmt::format(
          "Schur block ({}) has rank {} but d_alpha * m_alpha = {}", alpha.to_string(),
          span.cols(), block.dim_unitary * block.multiplicity));
    }
    block.basis = span.cast<Complex>();

    const RMatrix image = column_span(symmetrizers[arb]);
    if (image.cols() != block.dim_unitary) {
      throw InternalError(fmt::format(
          "Young symmetrizer image for ({}) has rank {} but d_alpha = {}",
          alpha.to_string(), image.cols(), block.dim_unitary));
    }
    block.arb_projector = image * image.transpose();
    basis.blocks.push_back(std::move(block));
  }
  return basis;
}

CVector s_alpha_vector(const SchurBlock& block) {
  const RMatrix& q = block.arb_projector;
  const Eigen::Index dim = q.rows();
  CVector out(dim * dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) out(i * dim + j) = q(i, j);
  }
  return out;
}

DenseState build_phi_est(const std::vector<double>& v, const SchurBasis& basis) {
  if (v.size() != basis.blocks.size()) {
    throw InvalidArgument(fmt::format("weight vector has {} entries but Y_(d={},n={}) has {}",
                                      v.size(), basis.d, basis.n, basis.blocks.size()));
  }
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw InvalidArgument(fmt::format("weight vector must have unit norm (|v|^2 = {:.17g})",
                                      norm2));
  }
  DenseState state;
  state.dims.assign(2 * basis.n, basis.d);
  const Eigen::Index dim = basis.blocks.front().arb_projector.rows();
  state.amplitudes = CVector::Zero(dim * dim);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0.0) continue;
    const auto& block = basis.blocks[k];
    state.amplitudes += (v[k] / std::sqrt(static_cast<double>(block.dim_unitary))) *
                        s_alpha_vector(block);
  }
  return state;
}

double verify_block_decomposition(const CMatrix& v, const YoungDiagram& alpha, int d,
                                  int D, int n, const OracleLimits& limits) {
  require_isometry(v);
  if (v.cols() != d || v.rows() != D) {
    throw InvalidArgument(fmt::format("expected a {}x{} isometry, got {}x{}", D, d,
                                      v.rows(), v.cols()));
  }
  if (alpha.n() != n || alpha.length() > d) {
    throw InvalidArgument(fmt::format("diagram ({}) is not in Y_(d={},n={})",
                                      alpha.to_string(), d, n));
  }
  check_projector_scale(n + 1, limits);

  const CMatrix vt = tensor_power(v, n + 1);
  const CMatrix left_alpha =
      kron(isotypic_projector(alpha.with_row_bound(d), d, limits).cast<Complex>(),
           CMatrix::Identity(d, d));
  const CMatrix restricted = vt * left_alpha;

  double residual = 0.0;
  for (const auto& mu : enumerate_diagrams(d, n + 1)) {
    const CMatrix right = restricted * isotypic_projector(mu, d, limits).cast<Complex>();
    const YoungDiagram mu_big = mu.with_row_bound(D);
    for (const auto& nu : enumerate_diagrams(D, n + 1)) {
      if (nu == mu_big) continue;
      const CMatrix cross = isotypic_projector(nu, D, limits).cast<Complex>() * right;
      residual = std::max(residual, max_abs(cross));
    }
  }
  return residual;
}

}  // namespace isoest::oracle
