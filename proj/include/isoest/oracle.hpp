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

// Brute-force verification in the full tensor space. Everything here works
// with dense matrices of dimension d^n * D^n and is meant for n <= 3.

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "isoest/rng.hpp"
#include "isoest/young.hpp"

namespace isoest::oracle {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

/// Scale limits for the brute-force routines.
struct OracleLimits {
  int max_n_projector = 3;           // projector algebra and Schur bases
  int max_n_monte_carlo = 2;         // Monte-Carlo fidelity
  long long max_dimension = 10'000;  // d^n * D^n of the Monte-Carlo space
};

// ---------------------------------------------------------------- dense types

/// Vector on a tensor product of factors with dimensions `dims`; amplitudes
/// are stored with the first factor most significant.
struct DenseState {
  std::vector<int> dims;
  CVector amplitudes;

  double norm() const { return amplitudes.norm(); }
};

/// Linear map between tensor products; `matrix` has prod(out_dims) rows and
/// prod(in_dims) columns.
struct DenseOperator {
  std::vector<int> in_dims;
  std::vector<int> out_dims;
  CMatrix matrix;
};

long long dim_product(const std::vector<int>& dims);

/// Kronecker product (first factor most significant).
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// k-fold Kronecker power; k = 0 gives the 1x1 identity.
CMatrix tensor_power(const CMatrix& a, int k);

/// max |V^dagger V - 1| entrywise.
double isometry_defect(const CMatrix& v);

/// max |P^2 - P| and max |P - P^dagger| entrywise.
double projector_defect(const CMatrix& p);

double max_abs(const CMatrix& m);

/// Throws InvalidArgument when the matrix is not an isometry to `tol`.
void require_isometry(const CMatrix& v, double tol = 1e-12);

// ------------------------------------------------------------ symmetric group

/// One-line notation: sigma[k] is the image of position k (0-based).
using Permutation = std::vector<int>;

/// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// (sigma tau)(k) = sigma(tau(k)).
Permutation compose(const Permutation& sigma, const Permutation& tau);

Permutation inverse(const Permutation& sigma);

int sign(const Permutation& sigma);

/// Cycle lengths in descending order.
std::vector<int> cycle_type(const Permutation& sigma);

/// P_sigma on (C^d)^{(x) n}: the tensor factor at position k is moved to
/// position sigma(k), so that P_sigma P_tau = P_{sigma tau}.
RMatrix permutation_op(const Permutation& sigma, int d);

/// Irreducible character chi_alpha evaluated on a cycle type
/// (Murnaghan-Nakayama rule).
long long character(const YoungDiagram& alpha, const std::vector<int>& cycle_type);

/// Standard tableaux of shape alpha as row-wise lists of the entries
/// 0..n-1. The order is that of a depth-first search placing each entry in
/// the topmost admissible row first, so the first tableau is filled row by
/// row.
std::vector<std::vector<std::vector<int>>> standard_tableaux(const YoungDiagram& alpha);

/// Young symmetrizer e_T = b_T a_T (column antisymmetrizer after row
/// symmetrizer) acting on (C^d)^{(x) n}.
RMatrix young_symmetrizer(const std::vector<std::vector<int>>& tableau, int n, int d);

// ---------------------------------------------------------------- Schur-Weyl

/// Isotypic projector P_alpha = (m_alpha / n!) sum_sigma chi_alpha(sigma) P_sigma
/// on (C^d)^{(x) n}. Diagrams with more than d rows give the zero matrix.
RMatrix isotypic_projector(const YoungDiagram& alpha, int d,
                           const OracleLimits& limits = {});

struct SchurBlock {
  YoungDiagram diagram;
  long long dim_unitary = 0;   // d_alpha^(d)
  long long multiplicity = 0;  // m_alpha
  CMatrix basis;               // orthonormal columns spanning U_alpha (x) S_alpha
  RMatrix arb_projector;       // projector onto U_alpha (x) |arb_alpha>
};

struct SchurBasis {
  int d = 0;
  int n = 0;
  std::vector<SchurBlock> blocks;  // aligned with enumerate_diagrams(d, n)
};

/// Block bases from Young symmetrizers of all standard tableaux. The
/// multiplicity vector |arb_alpha> is fixed by the standard tableau with
/// index arb_tableau[k] (default: the first) for block k. Throws
/// InternalError when a block rank differs from d_alpha^(d) m_alpha.
SchurBasis schur_block_basis(int d, int n, const std::vector<int>& arb_tableau = {},
                             const OracleLimits& limits = {});

/// |S_alpha>> = sum_s |alpha,s>|arb> (x) |alpha,s>|arb>* realised as
/// (Q_alpha (x) 1)|Omega> on (C^d)^{(x) n} (x) (C^d)^{(x) n}.
CVector s_alpha_vector(const SchurBlock& block);

/// |phi_est> = sum_alpha v_alpha / sqrt(d_alpha) |S_alpha>>. `v` is aligned
/// with enumerate_diagrams(d, n) and must have unit norm.
DenseState build_phi_est(const std::vector<double>& v, const SchurBasis& basis);

/// Largest entry of the cross-block components of V_alpha (x) V:
/// max over mu != nu of |P_nu^(D) V^{(x) n+1} (P_alpha (x) 1) P_mu^(d)|.
double verify_block_decomposition(const CMatrix& v, const YoungDiagram& alpha, int d,
                                  int D, int n, const OracleLimits& limits = {});

// --------------------------------------------------------------- Monte Carlo

/// Haar isometry C^d -> C^D: QR of a complex Gaussian D x d matrix with the
/// triangular factor's diagonal made positive.
CMatrix haar_isometry(int d, int D, CounterRng& rng);

/// (1/d^2) |Tr(V^dagger W)|^2.
double channel_fidelity(const CMatrix& v, const CMatrix& w);

struct OracleEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Number of independent substreams; fixed so that results do not depend on
/// the number of worker threads.
inline constexpr int kMonteCarloChunks = 64;

struct MonteCarloOptions {
  long long samples = 100'000;
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;                // 0: hardware concurrency
  std::vector<int> arb_tableau;   // see schur_block_basis
  OracleLimits limits;
};

/// Monte-Carlo estimate of the estimation fidelity of the covariant protocol
/// with resource |phi_est(v)> and the coherent POVM
/// |eta_W> = sum_alpha sqrt(d_alpha^(D)) (1 (x) W^{(x) n})|S_alpha>>, sampling the
/// true isometry V and the outcome W independently from Haar measure.
OracleEstimate mc_fidelity(const std::vector<double>& v, int n, int d, int D,
                           const MonteCarloOptions& options = {});

/// Same integrand with the true isometry frozen at `v_fixed`.
OracleEstimate mc_fidelity_fixed(const std::vector<double>& v, int n, int d, int D,
                                 const CMatrix& v_fixed,
                                 const MonteCarloOptions& options = {});

// --------------------------------------------------------------------- HNKS

enum class HnksFamily { Isometry, Unitary };

/// The one-parameter family acting on the last input basis vector as a
/// rotation by theta into the extra output dimension: an isometry
/// C^d -> C^{d+1}, or its unitary completion on C^{d+1}.
CMatrix hnks_family(double theta, int d, HnksFamily family);

/// Closed-form derivative of hnks_family with respect to theta.
CMatrix hnks_family_derivative(double theta, int d, HnksFamily family);

/// H_theta = i V_theta^dagger dV_theta/dtheta from the closed-form derivative.
CMatrix hnks_hamiltonian(double theta, int d, HnksFamily family);

/// Same quantity from a central finite difference with step h.
CMatrix hnks_hamiltonian_fd(double theta, int d, HnksFamily family, double h = 1e-5);

/// i(|d><d-1| - |d-1><d|) on C^{d+1} (0-based basis labels).
CMatrix hnks_unitary_reference(int d);

}  // namespace isoest::oracle
