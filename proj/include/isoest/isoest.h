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

/*
 * isoest C API.
 *
 * All functions return an isoest_status. On failure, a description of the
 * most recent error on the calling thread is available from
 * isoest_last_error(). Objects are passed as opaque handles that must be
 * released with the matching *_free function; strings returned through
 * `char**` out-parameters must be released with isoest_free_string().
 */
#ifndef ISOEST_ISOEST_H
#define ISOEST_ISOEST_H

#include <stddef.h>
#include <stdint.h>

#if defined(ISOEST_BUILDING_LIBRARY)
#define ISOEST_API __attribute__((visibility("default")))
#else
#define ISOEST_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* ------------------------------------------------------------------ status */

typedef enum isoest_status {
  ISOEST_OK = 0,
  ISOEST_INVALID_ARGUMENT = 1,
  ISOEST_NOT_CONVERGED = 2,
  ISOEST_BUDGET_EXCEEDED = 3,
  ISOEST_INTERNAL_ERROR = 4,
  ISOEST_OUT_OF_MEMORY = 5,
  ISOEST_BUFFER_TOO_SMALL = 6
} isoest_status;

ISOEST_API const char* isoest_version(void);
ISOEST_API const char* isoest_status_name(isoest_status status);
/* Message of the last failed call on this thread ("" if none). */
ISOEST_API const char* isoest_last_error(void);
ISOEST_API void isoest_free_string(char* text);

/* ---------------------------------------------------------- Young diagrams */

typedef struct isoest_diagram_set isoest_diagram_set;

/* All Young diagrams with n boxes and at most d rows, in descending
 * lexicographic order. */
ISOEST_API isoest_status isoest_diagrams_enumerate(int d, int n, isoest_diagram_set** out);
ISOEST_API void isoest_diagrams_free(isoest_diagram_set* set);
ISOEST_API size_t isoest_diagrams_count(const isoest_diagram_set* set);
ISOEST_API int isoest_diagrams_row_bound(const isoest_diagram_set* set);
/* Writes the d row lengths of diagram `index` into `rows` (capacity >= d). */
ISOEST_API isoest_status isoest_diagrams_get(const isoest_diagram_set* set, size_t index,
                                             int* rows, size_t capacity);
/* Header "d=<d> n=<n> count=<k>" followed by one comma-joined diagram per line. */
ISOEST_API isoest_status isoest_diagrams_serialize(const isoest_diagram_set* set, char** out);

/* Exact d_alpha^(m) (Weyl dimension formula) as a decimal string. */
ISOEST_API isoest_status isoest_dim_unitary(const int* rows, size_t len, int m, char** out);
ISOEST_API isoest_status isoest_dim_unitary_log2(const int* rows, size_t len, int m,
                                                 double* out);
/* Exact number of standard tableaux m_alpha as a decimal string. */
ISOEST_API isoest_status isoest_count_stab(const int* rows, size_t len, char** out);

/* -------------------------------------------------------------- estimation */

typedef struct isoest_power_options {
  double tol;       /* relative residual target, e.g. 1e-12 */
  long max_iter;    /* iteration budget, e.g. 1000000 */
} isoest_power_options;

/* Defaults used when a NULL options pointer is passed. */
ISOEST_API isoest_power_options isoest_power_options_default(void);

ISOEST_API isoest_status isoest_f_weight(double x, int d, int D, double* out);

typedef struct isoest_matrix isoest_matrix;

ISOEST_API isoest_status isoest_matrix_build(int n, int d, int D, isoest_matrix** out);
ISOEST_API void isoest_matrix_free(isoest_matrix* m);
ISOEST_API size_t isoest_matrix_size(const isoest_matrix* m);
/* Number of stored upper-triangular entries. */
ISOEST_API size_t isoest_matrix_nnz(const isoest_matrix* m);
ISOEST_API isoest_status isoest_matrix_at(const isoest_matrix* m, size_t row, size_t col,
                                          double* out);
ISOEST_API isoest_status isoest_matrix_max_row_sum(const isoest_matrix* m, double* out);
/* v^T M v for a vector aligned with the matrix diagrams. */
ISOEST_API isoest_status isoest_matrix_quadratic_form(const isoest_matrix* m,
                                                      const double* v, size_t len,
                                                      double* out);
/* Text dump: header "n d D size", then "i j value" per upper entry. */
ISOEST_API isoest_status isoest_matrix_dump(const isoest_matrix* m, char** out);
ISOEST_API isoest_status isoest_matrix_diagrams(const isoest_matrix* m,
                                                isoest_diagram_set** out);

typedef struct isoest_fidelity_report isoest_fidelity_report;

ISOEST_API isoest_status isoest_optimal_fidelity(int n, int d, int D,
                                                 const isoest_power_options* options,
                                                 isoest_fidelity_report** out);
ISOEST_API void isoest_fidelity_report_free(isoest_fidelity_report* report);
ISOEST_API double isoest_fidelity_report_value(const isoest_fidelity_report* report);
ISOEST_API long isoest_fidelity_report_iterations(const isoest_fidelity_report* report);
ISOEST_API double isoest_fidelity_report_residual(const isoest_fidelity_report* report);
ISOEST_API double isoest_fidelity_report_rowsum_bound(const isoest_fidelity_report* report);
ISOEST_API double isoest_fidelity_report_jensen_bound(const isoest_fidelity_report* report);
ISOEST_API size_t isoest_fidelity_report_size(const isoest_fidelity_report* report);
/* Copies the normalized nonnegative Perron vector (capacity >= size). */
ISOEST_API isoest_status isoest_fidelity_report_eigvector(const isoest_fidelity_report* report,
                                                          double* out, size_t capacity);
ISOEST_API isoest_status isoest_fidelity_report_diagrams(const isoest_fidelity_report* report,
                                                         isoest_diagram_set** out);

/* Closed-form upper bound from row sums of f-weights. */
ISOEST_API isoest_status isoest_upper_bound_rowsum(int n, int d, int D, double* out);

/* ---------------------------------------------------------------- protocol */

typedef struct isoest_protocol_params {
  int n, d, N, q, r;
} isoest_protocol_params;

ISOEST_API isoest_status isoest_max_admissible_N(int n, int d, int* out);
/* Also writes the window offsets A_1..A_{d-1} into `A` when A != NULL
 * (capacity >= d - 1). */
ISOEST_API isoest_status isoest_partition_params(int n, int d, int N,
                                                 isoest_protocol_params* out, int* A,
                                                 size_t capacity);
/* The N Fejer weights g_0..g_{N-1} (capacity >= N). */
ISOEST_API isoest_status isoest_g_weights(int N, double* out, size_t capacity);
ISOEST_API isoest_status isoest_epsilon_g(int N, double* out);

typedef struct isoest_protocol_weights isoest_protocol_weights;

ISOEST_API isoest_status isoest_protocol_weights_build(int n, int d, int N,
                                                       isoest_protocol_weights** out);
ISOEST_API void isoest_protocol_weights_free(isoest_protocol_weights* w);
ISOEST_API size_t isoest_protocol_weights_count(const isoest_protocol_weights* w);
ISOEST_API isoest_status isoest_protocol_weights_support(const isoest_protocol_weights* w,
                                                         isoest_diagram_set** out);
/* Weights aligned with the support (capacity >= count). */
ISOEST_API isoest_status isoest_protocol_weights_values(const isoest_protocol_weights* w,
                                                        double* out, size_t capacity);
/* Weights scattered over all of Y_{d,n} in canonical order (capacity >= |Y|). */
ISOEST_API isoest_status isoest_protocol_weights_dense(const isoest_protocol_weights* w,
                                                       double* out, size_t capacity);

ISOEST_API isoest_status isoest_fidelity_lower_bound(int n, int d, int D, int N, double* out);
ISOEST_API isoest_status isoest_fidelity_upper_bound_protocol(int n, int d, int D, int N,
                                                              double* out);
/* v^T M_est v for the protocol weights v. */
ISOEST_API isoest_status isoest_protocol_fidelity(int n, int d, int D, int N, double* out);

ISOEST_API isoest_status isoest_h_exponent(double t, int d, int D, double* out);
ISOEST_API isoest_status isoest_optimal_schedule_N(int n, int d, int D, int* out);
ISOEST_API isoest_status isoest_power_schedule_N(int n, double t, int* out);

/* ------------------------------------------------------------------- costs */

typedef enum isoest_strategy {
  ISOEST_STRATEGY_EST = 0,
  ISOEST_STRATEGY_PBT = 1,
  ISOEST_STRATEGY_CPTP = 2
} isoest_strategy;

ISOEST_API const char* isoest_strategy_name(isoest_strategy strategy);

typedef struct isoest_cost_report {
  isoest_strategy strategy;
  int n, d, D, N;
  double cost_bits;
  int has_epsilon_proxy;
  double epsilon_proxy;
} isoest_cost_report;

/* Program cost log2(dim) of the given strategy with window parameter N. */
ISOEST_API isoest_status isoest_program_cost(isoest_strategy strategy, int n, int d, int D,
                                             int N, isoest_cost_report* out);
/* 1 - F_est(n, d, d). */
ISOEST_API isoest_status isoest_pbt_error_bound(int n, int d, double* out);

typedef enum isoest_query_strategy {
  ISOEST_QUERIES_CLASSICAL = 0,
  ISOEST_QUERIES_QUANTUM = 1
} isoest_query_strategy;

ISOEST_API isoest_status isoest_query_complexity(int d, int D, double eps,
                                                 isoest_query_strategy strategy, long* out);

/* Ordinary least squares y = slope * x + intercept. */
ISOEST_API isoest_status isoest_fit_line(const double* x, const double* y, size_t len,
                                         double* slope, double* intercept);

/* ------------------------------------------------------------------ oracle */

typedef struct isoest_mc_options {
  long long samples;
  uint64_t seed;
  int threads; /* 0: hardware concurrency */
} isoest_mc_options;

ISOEST_API isoest_mc_options isoest_mc_options_default(void);

typedef struct isoest_oracle_estimate {
  double mean;
  double std_error;
  long long samples;
  uint64_t seed;
} isoest_oracle_estimate;

/* Monte-Carlo fidelity of the covariant protocol with weights v over
 * Y_{d,n} (canonical order), sampling both isometries from Haar measure. */
ISOEST_API isoest_status isoest_mc_fidelity(const double* v, size_t len, int n, int d, int D,
                                            const isoest_mc_options* options,
                                            isoest_oracle_estimate* out);

/* Largest cross-block residual of V_alpha (x) V over all alpha in Y_{d,n}
 * for `count` Haar isometries drawn from `seed`. */
ISOEST_API isoest_status isoest_block_residual(int n, int d, int D, int count, uint64_t seed,
                                               double* out);

/* Largest of |P_a^2 - P_a|, |P_a P_b|, |sum_a P_a - 1| over Y_{d,n}. */
ISOEST_API isoest_status isoest_projector_residual(int d, int n, double* out);

typedef enum isoest_hnks_family {
  ISOEST_HNKS_ISOMETRY = 0,
  ISOEST_HNKS_UNITARY = 1
} isoest_hnks_family;

/* H_theta = i V^dag dV/dtheta as a row-major complex matrix split into real
 * and imaginary parts (capacity >= dim*dim). `dim` receives the matrix side
 * (d for the isometry family, d+1 for the unitary family). If
 * finite_difference_step > 0 a central difference replaces the closed-form
 * derivative. */
ISOEST_API isoest_status isoest_hnks_hamiltonian(double theta, int d, isoest_hnks_family family,
                                                 double finite_difference_step, double* re,
                                                 double* im, size_t capacity, size_t* dim);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ISOEST_ISOEST_H */
