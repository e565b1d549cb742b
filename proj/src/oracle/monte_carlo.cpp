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
#include <atomic>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

#include <fmt/format.h>

#include "isoest/error.hpp"
#include "isoest/oracle.hpp"

namespace isoest::oracle {

namespace {

// Running mean and centred second moment (Welford), mergeable in a fixed
// order (Chan et al.).
struct Moments {
  long long count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double total = static_cast<double>(count + other.count);
    const double delta = other.mean - mean;
    mean += delta * static_cast<double>(other.count) / total;
    m2 += other.m2 + delta * delta * static_cast<double>(count) *
                         static_cast<double>(other.count) / total;
    count += other.count;
  }
};

// Everything the integrand needs that does not depend on the sampled pair.
struct Integrand {
  int n = 0;
  int d = 0;
  int D = 0;
  CMatrix phi;     // |phi_est> as a d^n x d^n coefficient matrix
  CMatrix povm;    // sum_alpha sqrt(d_alpha^(D)) Q_alpha, d^n x d^n

  double operator()(const CMatrix& v, const CMatrix& w) const {
    const CMatrix phi_v = phi * tensor_power(v, n).transpose();
    const CMatrix eta_w = povm * tensor_power(w, n).transpose();
    const Complex overlap = eta_w.conjugate().cwiseProduct(phi_v).sum();
    return std::norm(overlap) * channel_fidelity(v, w);
  }
};

Integrand make_integrand(const std::vector<double>& v, int n, int d, int D,
                         const MonteCarloOptions& options) {
  if (n < 1 || d < 1 || D < d) {
    throw InvalidArgument(fmt::format("need n >= 1 and D >= d >= 1 (got n={}, d={}, D={})",
                                      n, d, D));
  }
  if (n > options.limits.max_n_monte_carlo) {
    throw BudgetExceeded(fmt::format("n = {} exceeds the Monte-Carlo limit {}", n,
                                     options.limits.max_n_monte_carlo));
  }
  const double dim = std::pow(static_cast<double>(d) * D, n);
  if (dim > static_cast<double>(options.limits.max_dimension)) {
    throw BudgetExceeded(fmt::format("d^n D^n = {} exceeds the dimension budget {}", dim,
                                     options.limits.max_dimension));
  }
  if (options.samples < 100) throw InvalidArgument("Monte Carlo needs at least 100 samples");

  const SchurBasis basis = schur_block_basis(d, n, options.arb_tableau, options.limits);
  const DenseState state = build_phi_est(v, basis);
  const Eigen::Index side = basis.blocks.front().arb_projector.rows();

  Integrand f{n, d, D, CMatrix(side, side), CMatrix::Zero(side, side)};
  for (Eigen::Index i = 0; i < side; ++i) {
    for (Eigen::Index j = 0; j < side; ++j) f.phi(i, j) = state.amplitudes(i * side + j);
  }
  for (const auto& block : basis.blocks) {
    const double weight =
        std::sqrt(static_cast<double>(dim_unitary(block.diagram, D).convert_to<long long>()));
    f.povm += weight * block.arb_projector.cast<Complex>();
  }
  return f;
}

template <class Sampler>
OracleEstimate run_chunks(const MonteCarloOptions& options, Sampler&& sample) {
  std::vector<Moments> chunks(kMonteCarloChunks);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (int c = next++; c < kMonteCarloChunks && !failed; c = next++) {
      try {
        const long long begin = options.samples * c / kMonteCarloChunks;
        const long long end = options.samples * (c + 1) / kMonteCarloChunks;
        CounterRng rng = CounterRng::substream(options.seed, static_cast<std::uint64_t>(c));
        Moments m;
        for (long long s = begin; s < end; ++s) m.push(sample(rng));
        chunks[c] = m;
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };

  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, kMonteCarloChunks);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  Moments total;
  for (const auto& m : chunks) total.merge(m);
  const double variance = total.m2 / static_cast<double>(total.count - 1);
  return OracleEstimate{total.mean,
                        std::sqrt(variance / static_cast<double>(total.count)),
                        total.count, options.seed};
}

}  // namespace

CMatrix haar_isometry(int d, int D, CounterRng& rng) {
  if (d < 1 || D < d) {
    throw InvalidArgument(fmt::format("need D >= d >= 1 (got d={}, D={})", d, D));
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(D, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < D; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(D, d);
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

double channel_fidelity(const CMatrix& v, const CMatrix& w) {
  if (v.rows() != w.rows() || v.cols() != w.cols()) {
    throw InvalidArgument("channel_fidelity: operator shapes differ");
  }
  const double d = static_cast<double>(v.cols());
  return std::norm((v.adjoint() * w).trace()) / (d * d);
}

OracleEstimate mc_fidelity(const std::vector<double>& v, int n, int d, int D,
                           const MonteCarloOptions& options) {
  const Integrand f = make_integrand(v, n, d, D, options);
  return run_chunks(options, [&](CounterRng& rng) {
    const CMatrix truth = haar_isometry(d, D, rng);
    const CMatrix guess = haar_isometry(d, D, rng);
    return f(truth, guess);
  });
}

OracleEstimate mc_fidelity_fixed(const std::vector<double>& v, int n, int d, int D,
                                 const CMatrix& v_fixed, const MonteCarloOptions& options) {
  if (v_fixed.rows() != D || v_fixed.cols() != d) {
    throw InvalidArgument(fmt::format("expected a {}x{} isometry", D, d));
  }
  require_isometry(v_fixed, 1e-10);
  const Integrand f = make_integrand(v, n, d, D, options);
  return run_chunks(options, [&](CounterRng& rng) {
    const CMatrix guess = haar_isometry(d, D, rng);
    return f(v_fixed, guess);
  });
}

}  // namespace isoest::oracle
