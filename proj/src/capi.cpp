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

#include "isoest/isoest.h"

#include <cstdlib>
#include <cstring>
#include <algorithm>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "isoest/error.hpp"
#include "isoest/estimation.hpp"
#include "isoest/fit.hpp"
#include "isoest/oracle.hpp"
#include "isoest/pbt.hpp"
#include "isoest/protocol.hpp"
#include "isoest/young.hpp"

struct isoest_diagram_set {
  isoest::DiagramSet value;
};

struct isoest_matrix {
  int n, d, D;
  isoest::SparseSymMatrix value;
};

struct isoest_fidelity_report {
  isoest::FidelityReport value;
};

struct isoest_protocol_weights {
  isoest::ProtocolWeights value;
};

namespace {

thread_local std::string last_error;

struct BufferTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

isoest_status fail(isoest_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
isoest_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return ISOEST_OK;
  } catch (const isoest::InvalidArgument& e) {
    return fail(ISOEST_INVALID_ARGUMENT, e.what());
  } catch (const isoest::NotConverged& e) {
    return fail(ISOEST_NOT_CONVERGED, e.what());
  } catch (const isoest::BudgetExceeded& e) {
    return fail(ISOEST_BUDGET_EXCEEDED, e.what());
  } catch (const BufferTooSmall& e) {
    return fail(ISOEST_BUFFER_TOO_SMALL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ISOEST_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(ISOEST_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(ISOEST_INTERNAL_ERROR, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw isoest::InvalidArgument(std::string(what) + " must not be NULL");
}

void require_capacity(std::size_t capacity, std::size_t needed) {
  if (capacity < needed) {
    throw BufferTooSmall("output buffer too small: need " + std::to_string(needed) +
                            " entries");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

isoest::YoungDiagram diagram_from(const int* rows, std::size_t len, int bound) {
  if (len > 0) require(rows, "rows");
  std::vector<int> r(rows, rows + len);
  int nonzero = 0;
  for (int x : r) nonzero += x != 0;
  return isoest::YoungDiagram(std::move(r), std::max({bound, nonzero, 1}));
}

isoest::PowerIterationOptions power_options(const isoest_power_options* options) {
  isoest::PowerIterationOptions out;
  if (options != nullptr) {
    out.tol = options->tol;
    out.max_iter = options->max_iter;
  }
  return out;
}

isoest::Strategy to_strategy(isoest_strategy s) {
  switch (s) {
    case ISOEST_STRATEGY_EST: return isoest::Strategy::Estimation;
    case ISOEST_STRATEGY_PBT: return isoest::Strategy::Pbt;
    case ISOEST_STRATEGY_CPTP: return isoest::Strategy::Cptp;
  }
  throw isoest::InvalidArgument("unknown strategy");
}

}  // namespace

extern "C" {

const char* isoest_version(void) { return "0.1.0"; }

const char* isoest_status_name(isoest_status status) {
  switch (status) {
    case ISOEST_OK: return "ok";
    case ISOEST_INVALID_ARGUMENT: return "invalid argument";
    case ISOEST_NOT_CONVERGED: return "not converged";
    case ISOEST_BUDGET_EXCEEDED: return "budget exceeded";
    case ISOEST_INTERNAL_ERROR: return "internal error";
    case ISOEST_OUT_OF_MEMORY: return "out of memory";
    case ISOEST_BUFFER_TOO_SMALL: return "buffer too small";
  }
  return "unknown status";
}

const char* isoest_last_error(void) { return last_error.c_str(); }

void isoest_free_string(char* text) { std::free(text); }

// ------------------------------------------------------------ Young diagrams

isoest_status isoest_diagrams_enumerate(int d, int n, isoest_diagram_set** out) {
  return guarded([&] {
    require(out, "out");
    *out = new isoest_diagram_set{isoest::enumerate_diagrams(d, n)};
  });
}

void isoest_diagrams_free(isoest_diagram_set* set) { delete set; }

size_t isoest_diagrams_count(const isoest_diagram_set* set) {
  return set == nullptr ? 0 : set->value.size();
}

int isoest_diagrams_row_bound(const isoest_diagram_set* set) {
  return set == nullptr ? 0 : set->value.d();
}

isoest_status isoest_diagrams_get(const isoest_diagram_set* set, size_t index, int* rows,
                                  size_t capacity) {
  return guarded([&] {
    require(set, "set");
    require(rows, "rows");
    if (index >= set->value.size()) throw isoest::InvalidArgument("diagram index out of range");
    const auto r = set->value[index].rows();
    require_capacity(capacity, r.size());
    std::copy(r.begin(), r.end(), rows);
  });
}

isoest_status isoest_diagrams_serialize(const isoest_diagram_set* set, char** out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    *out = copy_string(set->value.serialize());
  });
}

isoest_status isoest_dim_unitary(const int* rows, size_t len, int m, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(isoest::dim_unitary(diagram_from(rows, len, m), m).str());
  });
}

isoest_status isoest_dim_unitary_log2(const int* rows, size_t len, int m, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = isoest::dim_unitary_log2(diagram_from(rows, len, m), m);
  });
}

isoest_status isoest_count_stab(const int* rows, size_t len, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(isoest::count_stab(diagram_from(rows, len, 1)).str());
  });
}

// ---------------------------------------------------------------- estimation

isoest_power_options isoest_power_options_default(void) {
  const isoest::PowerIterationOptions defaults;
  return isoest_power_options{defaults.tol, defaults.max_iter};
}

isoest_status isoest_f_weight(double x, int d, int D, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = isoest::f_weight(x, d, D);
  });
}

isoest_status isoest_matrix_build(int n, int d, int D, isoest_matrix** out) {
  return guarded([&] {
    require(out, "out");
    *out = new isoest_matrix{n, d, D, isoest::build_m_est(n, d, D)};
  });
}

void isoest_matrix_free(isoest_matrix* m) { delete m; }

size_t isoest_matrix_size(const isoest_matrix* m) { return m == nullptr ? 0 : m->value.size(); }

size_t isoest_matrix_nnz(const isoest_matrix* m) {
  return m == nullptr ? 0 : m->value.entries().size();
}

isoest_status isoest_matrix_at(const isoest_matrix* m, size_t row, size_t col, double* out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    if (row >= m->value.size() || col >= m->value.size()) {
      throw isoest::InvalidArgument("matrix index out of range");
    }
    *out = m->value.at(row, col);
  });
}

isoest_status isoest_matrix_max_row_sum(const isoest_matrix* m, double* out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = m->value.max_row_sum();
  });
}

isoest_status isoest_matrix_quadratic_form(const isoest_matrix* m, const double* v, size_t len,
                                           double* out) {
  return guarded([&] {
    require(m, "matrix");
    require(v, "v");
    require(out, "out");
    *out = isoest::fidelity_of_vector(m->value, std::span<const double>(v, len));
  });
}

isoest_status isoest_matrix_dump(const isoest_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = copy_string(isoest::dump_matrix(m->value, m->n, m->d, m->D));
  });
}

isoest_status isoest_matrix_diagrams(const isoest_matrix* m, isoest_diagram_set** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = new isoest_diagram_set{m->value.diagram_set()};
  });
}

isoest_status isoest_optimal_fidelity(int n, int d, int D, const isoest_power_options* options,
                                      isoest_fidelity_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = new isoest_fidelity_report{isoest::optimal_fidelity(n, d, D, power_options(options))};
  });
}

void isoest_fidelity_report_free(isoest_fidelity_report* report) { delete report; }

double isoest_fidelity_report_value(const isoest_fidelity_report* report) {
  return report == nullptr ? 0.0 : report->value.fidelity;
}

long isoest_fidelity_report_iterations(const isoest_fidelity_report* report) {
  return report == nullptr ? 0 : report->value.iterations;
}

double isoest_fidelity_report_residual(const isoest_fidelity_report* report) {
  return report == nullptr ? 0.0 : report->value.residual;
}

double isoest_fidelity_report_rowsum_bound(const isoest_fidelity_report* report) {
  return report == nullptr ? 0.0 : report->value.rowsum_bound;
}

double isoest_fidelity_report_jensen_bound(const isoest_fidelity_report* report) {
  return report == nullptr ? 0.0 : report->value.jensen_bound;
}

size_t isoest_fidelity_report_size(const isoest_fidelity_report* report) {
  return report == nullptr ? 0 : report->value.eigvector.size();
}

isoest_status isoest_fidelity_report_eigvector(const isoest_fidelity_report* report,
                                               double* out, size_t capacity) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    const auto& v = report->value.eigvector;
    require_capacity(capacity, v.size());
    std::copy(v.begin(), v.end(), out);
  });
}

isoest_status isoest_fidelity_report_diagrams(const isoest_fidelity_report* report,
                                              isoest_diagram_set** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = new isoest_diagram_set{report->value.diagrams};
  });
}

isoest_status isoest_upper_bound_rowsum(int n, int d, int D, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = isoest::upper_bound_rowsum(n, d, D);
  });
}

// ------------------------------------------------------------------ protocol

isoest_status isoest_max_admissible_N(int n, int d, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = isoest::max_admissible_N(n, d);
  });
}

isoest_status isoest_partition_params(int n, int d, int N, isoest_protocol_params* out, int* A,
                                      size_t capacity) {
  return guarded([&] {
    require(out, "out");
    const isoest::ProtocolParams p = isoest::partition_params(n, d, N);
    if (A != nullptr) {
      require_capacity(capacity, p.A.size());
      std::copy(p.A.begin(), p.A.end(), A);
    }
    *out = isoest_protocol_params{p.n, p.d, p.N, p.q, p.r};
  });
}

isoest_status isoest_g_weights(int N, double* out, size_t capacity) {
  return guarded([&] {
    require(out, "out");
    const auto g = isoest::g_weights(N);
    require_capacity(capacity, g.size());
    std::copy(g.begin(), g.end(), out);
  });
}

isoest_status isoest_epsilon_g(int N, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = isoest::epsilon_g(N);
  });
}

isoest_status isoest_protocol_weights_build(int n, int d, int N, isoest_protocol_weights** out) {
  return guarded([&] {
    require(out, "out");
    *out = new isoest_protocol_weights{isoest::build_v(n, d, N)};
  });
}

void isoest_protocol_weights_free(isoest_protocol_weights* w) { delete w; }

size_t isoest_protocol_weights_count(const isoest_protocol_weights* w) {
  return w == nullptr ? 0 : w->value.values.size();
}

isoest_status isoest_protocol_weights_support(const isoest_protocol_weights* w,
                                              isoest_diagram_set** out) {
  return guarded([&] {
    require(w, "weights");
    require(out, "out");
    *out = new isoest_diagram_set{w->value.support};
  });
}

isoest_status isoest_protocol_weights_values(const isoest_protocol_weights* w, double* out,
                                             size_t capacity) {
  return guarded([&] {
    require(w, "weights");
    require(out, "out");
    require_capacity(capacity, w->value.values.size());
    std::copy(w->value.values.begin(), w->value.values.end(), out);
  });
}

isoest_status isoest_protocol_weights_dense(const isoest_protocol_weights* w, double* out,
                                            size_t capacity) {
  return guarded([&] {
    require(w, "weights");
    require(out, "out");
    const auto full = isoest::enumerate_diagrams(w->value.support.d(), w->value.support.n());
    const auto dense = w->value.dense_over(full);
    require_capacity(capacity, dense.size());
    std::copy(dense.begin(), dense.end(), out);
  });
}

isoest_status isoest_fidelity_lower_bound(int n, int d, int D, int N, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = isoest::fidelity_lower_bound(n, d, D, N);
  });
}

isoest_status isoest_fidelity_upper_bound_protocol(int n, int d, int D, int N, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = isoest::fidelity_upper_bound_protocol(n, d, D, N);
  });
}

isoest_status isoest_protocol_fidelity(int n, int d, int D, int N, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = isoest::protocol_fidelity(n, d, D, N);
  });
}

isoest_status isoest_h_exponent(double t, int d, int D, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = isoest::h_exponent(t, d, D);
  });
}

isoest_status isoest_optimal_schedule_N(int n, int d, int D, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = isoest::optimal_schedule_N(n, d, D);
  });
}

isoest_status isoest_power_schedule_N(int n, double t, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = isoest::power_schedule_N(n, t);
  });
}

// --------------------------------------------------------------------- costs

const char* isoest_strategy_name(isoest_strategy strategy) {
  switch (strategy) {
    case ISOEST_STRATEGY_EST: return "est";
    case ISOEST_STRATEGY_PBT: return "pbt";
    case ISOEST_STRATEGY_CPTP: return "cptp";
  }
  return "unknown";
}

isoest_status isoest_program_cost(isoest_strategy strategy, int n, int d, int D, int N,
                                  isoest_cost_report* out) {
  return guarded([&] {
    require(out, "out");
    isoest::CostReport r;
    switch (to_strategy(strategy)) {
      case isoest::Strategy::Estimation: r = isoest::est_program_cost(n, d, D, N); break;
      case isoest::Strategy::Pbt: r = isoest::pbt_program_cost(n, d, D, N); break;
      case isoest::Strategy::Cptp: r = isoest::cptp_cost_bound(d, D, n, N); break;
    }
    *out = isoest_cost_report{strategy, r.n, r.d, r.D, r.N, r.cost_bits,
                              r.epsilon_proxy.has_value() ? 1 : 0,
                              r.epsilon_proxy.value_or(0.0)};
  });
}

isoest_status isoest_pbt_error_bound(int n, int d, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = isoest::pbt_error_bound(n, d);
  });
}

isoest_status isoest_query_complexity(int d, int D, double eps, isoest_query_strategy strategy,
                                      long* out) {
  return guarded([&] {
    require(out, "out");
    if (strategy != ISOEST_QUERIES_CLASSICAL && strategy != ISOEST_QUERIES_QUANTUM) {
      throw isoest::InvalidArgument("unknown query strategy");
    }
    *out = isoest::sar_query_complexity(d, D, eps,
                                        strategy == ISOEST_QUERIES_CLASSICAL
                                            ? isoest::QueryStrategy::Classical
                                            : isoest::QueryStrategy::Quantum);
  });
}

isoest_status isoest_fit_line(const double* x, const double* y, size_t len, double* slope,
                              double* intercept) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(slope, "slope");
    require(intercept, "intercept");
    const auto fit = isoest::fit_line(std::span<const double>(x, len),
                                      std::span<const double>(y, len));
    *slope = fit.slope;
    *intercept = fit.intercept;
  });
}

// -------------------------------------------------------------------- oracle

isoest_mc_options isoest_mc_options_default(void) {
  const isoest::oracle::MonteCarloOptions defaults;
  return isoest_mc_options{defaults.samples, defaults.seed, defaults.threads};
}

isoest_status isoest_mc_fidelity(const double* v, size_t len, int n, int d, int D,
                                 const isoest_mc_options* options,
                                 isoest_oracle_estimate* out) {
  return guarded([&] {
    require(v, "v");
    require(out, "out");
    isoest::oracle::MonteCarloOptions o;
    if (options != nullptr) {
      o.samples = options->samples;
      o.seed = options->seed;
      o.threads = options->threads;
    }
    const auto e = isoest::oracle::mc_fidelity(std::vector<double>(v, v + len), n, d, D, o);
    *out = isoest_oracle_estimate{e.mean, e.std_error, e.samples, e.seed};
  });
}

isoest_status isoest_block_residual(int n, int d, int D, int count, uint64_t seed, double* out) {
  return guarded([&] {
    require(out, "out");
    if (count < 1) throw isoest::InvalidArgument("count must be positive");
    const auto diagrams = isoest::enumerate_diagrams(d, n);
    double worst = 0.0;
    for (int k = 0; k < count; ++k) {
      auto rng = isoest::CounterRng::substream(seed, static_cast<std::uint64_t>(k));
      const auto v = isoest::oracle::haar_isometry(d, D, rng);
      for (const auto& alpha : diagrams) {
        worst = std::max(worst, isoest::oracle::verify_block_decomposition(v, alpha, d, D, n));
      }
    }
    *out = worst;
  });
}

isoest_status isoest_projector_residual(int d, int n, double* out) {
  return guarded([&] {
    require(out, "out");
    const auto diagrams = isoest::enumerate_diagrams(d, n);
    std::vector<isoest::oracle::CMatrix> projectors;
    for (const auto& alpha : diagrams) {
      projectors.push_back(isoest::oracle::isotypic_projector(alpha, d).cast<std::complex<double>>());
    }
    const auto dim = projectors.front().rows();
    isoest::oracle::CMatrix total = isoest::oracle::CMatrix::Zero(dim, dim);
    double worst = 0.0;
    for (std::size_t a = 0; a < projectors.size(); ++a) {
      worst = std::max(worst, isoest::oracle::projector_defect(projectors[a]));
      for (std::size_t b = a + 1; b < projectors.size(); ++b) {
        worst = std::max(worst, isoest::oracle::max_abs(projectors[a] * projectors[b]));
      }
      total += projectors[a];
    }
    worst = std::max(worst, isoest::oracle::max_abs(total - isoest::oracle::CMatrix::Identity(dim, dim)));
    *out = worst;
  });
}

isoest_status isoest_hnks_hamiltonian(double theta, int d, isoest_hnks_family family,
                                      double finite_difference_step, double* re, double* im,
                                      size_t capacity, size_t* dim) {
  return guarded([&] {
    require(re, "re");
    require(im, "im");
    require(dim, "dim");
    if (family != ISOEST_HNKS_ISOMETRY && family != ISOEST_HNKS_UNITARY) {
      throw isoest::InvalidArgument("unknown HNKS family");
    }
    const auto f = family == ISOEST_HNKS_ISOMETRY ? isoest::oracle::HnksFamily::Isometry
                                                  : isoest::oracle::HnksFamily::Unitary;
    const auto h = finite_difference_step > 0.0
                       ? isoest::oracle::hnks_hamiltonian_fd(theta, d, f, finite_difference_step)
                       : isoest::oracle::hnks_hamiltonian(theta, d, f);
    const auto side = static_cast<std::size_t>(h.rows());
    require_capacity(capacity, side * side);
    for (std::size_t i = 0; i < side; ++i) {
      for (std::size_t j = 0; j < side; ++j) {
        re[i * side + j] = h(i, j).real();
        im[i * side + j] = h(i, j).imag();
      }
    }
    *dim = side;
  });
}

}  // extern "C"
