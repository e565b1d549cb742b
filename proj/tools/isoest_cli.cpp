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

// Command-line front end over the isoest C API: parameter sweeps, program
// costs, query complexities, Monte-Carlo oracle runs and the HNKS check.

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "isoest/isoest.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitConsistency = 2;
constexpr int kExitOracle = 3;

struct CliError {
  int code;
  std::string message;
};

void check(isoest_status status) {
  if (status == ISOEST_OK) return;
  const int code = (status == ISOEST_INVALID_ARGUMENT || status == ISOEST_BUDGET_EXCEEDED)
                       ? kExitInvalid
                       : kExitConsistency;
  throw CliError{code, fmt::format("{}: {}", isoest_status_name(status), isoest_last_error())};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using DiagramSetPtr =
    std::unique_ptr<isoest_diagram_set, Deleter<isoest_diagram_set, isoest_diagrams_free>>;
using ReportPtr = std::unique_ptr<isoest_fidelity_report,
                                  Deleter<isoest_fidelity_report, isoest_fidelity_report_free>>;
using MatrixPtr = std::unique_ptr<isoest_matrix, Deleter<isoest_matrix, isoest_matrix_free>>;
using WeightsPtr =
    std::unique_ptr<isoest_protocol_weights,
                    Deleter<isoest_protocol_weights, isoest_protocol_weights_free>>;

std::string take_string(char* raw) {
  std::string out(raw);
  isoest_free_string(raw);
  return out;
}

// ------------------------------------------------------------------- config

struct RunConfig {
  int d = 2;
  int D = 3;
  std::vector<int> n_list;
  std::optional<int> n_min, n_max;
  int n_step = 1;
  std::optional<int> N;
  std::optional<double> t;
  std::string schedule;  // power | max | optimal ("" = per-command default)
  std::string strategy = "est";
  std::vector<double> eps;
  long long samples = 100'000;
  std::uint64_t seed = 0xC0FFEE;
  int threads = 0;
  std::string weights = "perron";
  int theta_points = 20;
  bool with_vector = false;
  bool qubits = false;
  std::string format;
  std::string out;
};

std::vector<int> n_values(const RunConfig& c) {
  if (!c.n_list.empty()) {
    if (c.n_min || c.n_max) throw CliError{kExitInvalid, "use either --n or --n-min/--n-max"};
    return c.n_list;
  }
  if (!c.n_min || !c.n_max) throw CliError{kExitInvalid, "an n value or range is required"};
  if (*c.n_min > *c.n_max) throw CliError{kExitInvalid, "--n-min exceeds --n-max"};
  if (c.n_step < 1) throw CliError{kExitInvalid, "--n-step must be positive"};
  std::vector<int> out;
  for (int n = *c.n_min; n <= *c.n_max; n += c.n_step) out.push_back(n);
  return out;
}

int single_n(const RunConfig& c) {
  const auto ns = n_values(c);
  if (ns.size() != 1) throw CliError{kExitInvalid, "this command needs a single --n"};
  return ns.front();
}

void check_eps(const std::vector<double>& eps) {
  if (eps.empty()) throw CliError{kExitInvalid, "the eps grid is empty"};
  for (double e : eps) {
    if (!(e > 0.0 && e < 1.0)) {
      throw CliError{kExitInvalid, fmt::format("eps values must lie in (0, 1), got {}", e)};
    }
  }
}

// Window parameter N for the protocol at n.
int window_N(const RunConfig& c, int n, const std::string& fallback) {
  if (c.N) return *c.N;
  const std::string schedule = !c.schedule.empty() ? c.schedule : (c.t ? "power" : fallback);
  int N = 0;
  if (schedule == "power") {
    check(isoest_power_schedule_N(n, c.t.value_or(0.5), &N));
  } else if (schedule == "max") {
    check(isoest_max_admissible_N(n, c.d, &N));
  } else if (schedule == "optimal") {
    check(isoest_optimal_schedule_N(n, c.d, c.D, &N));
  } else {
    throw CliError{kExitInvalid, fmt::format("unknown schedule '{}'", schedule)};
  }
  return N;
}

// ------------------------------------------------------------------- output

using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
  json summary = json::object();  // emitted as "# key=value" lines in CSV
};

std::string format_double(double x) { return fmt::format("{:.15g}", x); }

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    out += (i ? "," : "") + t.header[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, long long>) out += std::to_string(v);
            else if constexpr (std::is_same_v<V, double>) out += format_double(v);
            else if constexpr (std::is_same_v<V, std::string>) out += v;
          },
          row[i]);
    }
    out += '\n';
  }
  for (const auto& [key, value] : t.summary.items()) {
    out += "# " + key + "=" +
           (value.is_number_float() ? format_double(value.get<double>()) : value.dump()) + '\n';
  }
  return out;
}

json to_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, std::monostate>) obj[t.header[i]] = nullptr;
            else obj[t.header[i]] = v;
          },
          row[i]);
    }
    rows.push_back(std::move(obj));
  }
  json out = json::object();
  out["rows"] = std::move(rows);
  if (!t.summary.empty()) out["summary"] = t.summary;
  return out;
}

void write_output(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  const std::filesystem::path target(c.out);
  const std::filesystem::path tmp =
      target.string() + fmt::format(".tmp.{}", static_cast<long>(::getpid()));
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw CliError{kExitInvalid, fmt::format("cannot write {}", tmp.string())};
    file << text;
    file.flush();
    if (!file) throw CliError{kExitInvalid, fmt::format("cannot write {}", tmp.string())};
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw CliError{kExitInvalid, fmt::format("cannot replace {}", target.string())};
  }
}

void emit_table(const RunConfig& c, const Table& t) {
  write_output(c, c.format == "json" ? to_json(t).dump(2) + "\n" : to_csv(t));
}

void emit_json(const RunConfig& c, const json& j) {
  if (c.format == "csv") {
    // Flat objects only: one header row and one value row.
    Table t;
    std::vector<Cell> row;
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured()) continue;
      t.header.push_back(key);
      if (value.is_number_integer()) row.emplace_back(value.get<long long>());
      else if (value.is_number_float()) row.emplace_back(value.get<double>());
      else if (value.is_string()) row.emplace_back(value.get<std::string>());
      else row.emplace_back(value.dump());
    }
    t.rows.push_back(std::move(row));
    write_output(c, to_csv(t));
    return;
  }
  write_output(c, j.dump(2) + "\n");
}

std::pair<double, double> fit(const std::vector<double>& x, const std::vector<double>& y) {
  double slope = 0.0, intercept = 0.0;
  check(isoest_fit_line(x.data(), y.data(), x.size(), &slope, &intercept));
  return {slope, intercept};
}

std::vector<std::string> diagram_labels(const isoest_diagram_set* set) {
  const int d = isoest_diagrams_row_bound(set);
  std::vector<std::string> out;
  std::vector<int> rows(d);
  for (std::size_t i = 0; i < isoest_diagrams_count(set); ++i) {
    check(isoest_diagrams_get(set, i, rows.data(), rows.size()));
    out.push_back(fmt::format("{}", fmt::join(rows, ",")));
  }
  return out;
}

// ----------------------------------------------------------------- commands

struct Perron {
  double fidelity;
  long iterations;
  double residual;
  double rowsum_bound;
  double jensen_bound;
  std::vector<double> vector;
  std::vector<std::string> labels;
};

Perron solve(int n, int d, int D) {
  isoest_fidelity_report* raw = nullptr;
  check(isoest_optimal_fidelity(n, d, D, nullptr, &raw));
  ReportPtr report(raw);
  Perron p{isoest_fidelity_report_value(raw),        isoest_fidelity_report_iterations(raw),
           isoest_fidelity_report_residual(raw),     isoest_fidelity_report_rowsum_bound(raw),
           isoest_fidelity_report_jensen_bound(raw), {}, {}};
  p.vector.resize(isoest_fidelity_report_size(raw));
  check(isoest_fidelity_report_eigvector(raw, p.vector.data(), p.vector.size()));
  isoest_diagram_set* set = nullptr;
  check(isoest_fidelity_report_diagrams(raw, &set));
  DiagramSetPtr owned(set);
  p.labels = diagram_labels(set);
  return p;
}

int cmd_fidelity(const RunConfig& c) {
  const int n = single_n(c);
  const Perron p = solve(n, c.d, c.D);
  json j;
  j["n"] = n;
  j["d"] = c.d;
  j["D"] = c.D;
  j["fidelity"] = p.fidelity;
  j["one_minus_fidelity"] = 1.0 - p.fidelity;
  j["iterations"] = p.iterations;
  j["residual"] = p.residual;
  j["rowsum_bound"] = p.rowsum_bound;
  j["jensen_bound"] = p.jensen_bound;
  j["diagrams"] = p.vector.size();
  const bool consistent = p.fidelity >= -1e-12 && p.fidelity <= 1.0 + 1e-12 &&
                          p.fidelity <= p.rowsum_bound + 1e-12 &&
                          p.fidelity <= p.jensen_bound + 1e-9;
  j["consistent"] = consistent;
  if (c.with_vector) {
    json v = json::array();
    for (std::size_t i = 0; i < p.vector.size(); ++i) {
      v.push_back(json{{"diagram", p.labels[i]}, {"v", p.vector[i]}});
    }
    j["eigvector"] = std::move(v);
  }
  emit_json(c, j);
  return consistent ? kExitOk : kExitConsistency;
}

int cmd_scan(const RunConfig& c) {
  const auto ns = n_values(c);
  std::map<int, double> a;
  std::vector<std::pair<int, double>> values;
  for (int n : ns) {
    const double f = solve(n, c.d, c.D).fidelity;
    values.emplace_back(n, f);
    a[n] = n * (1.0 - f);
  }
  Table t;
  t.header = {"n", "F", "one_minus_F", "a_n", "b_n", "richardson"};
  for (const auto& [n, f] : values) {
    const double one_minus = 1.0 - f;
    Cell richardson;
    if (auto it = a.find(2 * n); it != a.end()) richardson = 2.0 * it->second - a[n];
    t.rows.push_back({static_cast<long long>(n), f, one_minus, n * one_minus,
                      static_cast<double>(n) * n * one_minus, richardson});
  }
  emit_table(c, t);
  return kExitOk;
}

isoest_strategy parse_strategy(const std::string& s) {
  if (s == "est") return ISOEST_STRATEGY_EST;
  if (s == "pbt") return ISOEST_STRATEGY_PBT;
  if (s == "cptp") return ISOEST_STRATEGY_CPTP;
  throw CliError{kExitInvalid, fmt::format("unknown strategy '{}'", s)};
}

int cmd_cost(const RunConfig& c) {
  const isoest_strategy strategy = parse_strategy(c.strategy);
  const std::string fallback = strategy == ISOEST_STRATEGY_EST ? "power" : "max";
  Table t;
  t.header = {"strategy", "d", "D", "eps", "n", "cost_bits", "N", "log2_inv_eps"};
  if (c.qubits) t.header.push_back("cost_qubits");
  std::vector<double> x, y;
  for (int n : n_values(c)) {
    isoest_cost_report r{};
    check(isoest_program_cost(strategy, n, c.d, c.D, window_N(c, n, fallback), &r));
    Cell eps, log_inv;
    if (r.has_epsilon_proxy && r.epsilon_proxy > 0.0) {
      eps = r.epsilon_proxy;
      log_inv = -std::log2(r.epsilon_proxy);
      x.push_back(-std::log2(r.epsilon_proxy));
      y.push_back(r.cost_bits);
    }
    t.rows.push_back({std::string(isoest_strategy_name(strategy)), static_cast<long long>(c.d),
                      static_cast<long long>(c.D), eps, static_cast<long long>(n), r.cost_bits,
                      static_cast<long long>(r.N), log_inv});
    if (c.qubits) t.rows.back().push_back(r.cost_bits / 2.0);
  }
  if (x.size() >= 2) {
    const auto [slope, intercept] = fit(x, y);
    t.summary["fit_x"] = "log2(1/eps)";
    t.summary["slope"] = slope;
    t.summary["intercept"] = intercept;
  }
  emit_table(c, t);
  return kExitOk;
}

int cmd_queries(const RunConfig& c) {
  check_eps(c.eps);
  Table t;
  t.header = {"eps", "n_classical", "n_quantum", "log2_inv_eps", "log2_n_classical",
              "log2_n_quantum"};
  std::vector<double> x, yc, yq;
  for (double eps : c.eps) {
    Cell classical, log_classical;
    if (c.D > c.d) {
      long n = 0;
      check(isoest_query_complexity(c.d, c.D, eps, ISOEST_QUERIES_CLASSICAL, &n));
      classical = static_cast<long long>(n);
      log_classical = std::log2(static_cast<double>(n));
      yc.push_back(std::log2(static_cast<double>(n)));
    }
    long nq = 0;
    check(isoest_query_complexity(c.d, c.d, eps, ISOEST_QUERIES_QUANTUM, &nq));
    x.push_back(-std::log2(eps));
    yq.push_back(std::log2(static_cast<double>(nq)));
    t.rows.push_back({eps, classical, static_cast<long long>(nq), -std::log2(eps), log_classical,
                      std::log2(static_cast<double>(nq))});
  }
  std::set<double> distinct(x.begin(), x.end());
  if (distinct.size() >= 2) {
    t.summary["fit_x"] = "log2(1/eps)";
    if (yc.size() == x.size()) t.summary["slope_classical"] = fit(x, yc).first;
    t.summary["slope_quantum"] = fit(x, yq).first;
  }
  emit_table(c, t);
  return kExitOk;
}

int cmd_sweep(const RunConfig& c) {
  Table t;
  t.header = {"n", "d", "D", "N", "lower_bound", "achieved", "optimal", "upper_bound",
              "cost_bits"};
  for (int n : n_values(c)) {
    const int N = window_N(c, n, "power");
    double lower = 0, achieved = 0, upper = 0;
    check(isoest_fidelity_lower_bound(n, c.d, c.D, N, &lower));
    check(isoest_protocol_fidelity(n, c.d, c.D, N, &achieved));
    check(isoest_fidelity_upper_bound_protocol(n, c.d, c.D, N, &upper));
    isoest_cost_report r{};
    check(isoest_program_cost(ISOEST_STRATEGY_EST, n, c.d, c.D, N, &r));
    t.rows.push_back({static_cast<long long>(n), static_cast<long long>(c.d),
                      static_cast<long long>(c.D), static_cast<long long>(N), lower, achieved,
                      solve(n, c.d, c.D).fidelity, upper, r.cost_bits});
  }
  emit_table(c, t);
  return kExitOk;
}

int cmd_oracle(const RunConfig& c) {
  const int n = single_n(c);
  std::vector<double> v;
  double exact = 0.0;
  if (c.weights == "perron") {
    const Perron p = solve(n, c.d, c.D);
    v = p.vector;
  } else if (c.weights == "protocol") {
    isoest_protocol_weights* raw = nullptr;
    check(isoest_protocol_weights_build(n, c.d, window_N(c, n, "power"), &raw));
    WeightsPtr w(raw);
    isoest_diagram_set* all = nullptr;
    check(isoest_diagrams_enumerate(c.d, n, &all));
    DiagramSetPtr owned(all);
    v.resize(isoest_diagrams_count(all));
    check(isoest_protocol_weights_dense(raw, v.data(), v.size()));
  } else {
    throw CliError{kExitInvalid, fmt::format("unknown weights '{}'", c.weights)};
  }
  {
    isoest_matrix* raw = nullptr;
    check(isoest_matrix_build(n, c.d, c.D, &raw));
    MatrixPtr m(raw);
    check(isoest_matrix_quadratic_form(raw, v.data(), v.size(), &exact));
  }

  isoest_mc_options options = isoest_mc_options_default();
  options.samples = c.samples;
  options.seed = c.seed;
  options.threads = c.threads;
  isoest_oracle_estimate e{};
  check(isoest_mc_fidelity(v.data(), v.size(), n, c.d, c.D, &options, &e));

  double projector = 0.0, blocks = 0.0;
  check(isoest_projector_residual(c.d, n, &projector));
  check(isoest_block_residual(n, c.d, c.D, 3, c.seed, &blocks));

  const double sigma = e.std_error > 0.0 ? std::abs(e.mean - exact) / e.std_error
                                         : (e.mean == exact ? 0.0 : INFINITY);
  json j;
  j["mean"] = e.mean;
  j["std_error"] = e.std_error;
  j["samples"] = e.samples;
  j["seed"] = e.seed;
  j["exact"] = exact;
  j["sigma_distance"] = sigma;
  j["n"] = n;
  j["d"] = c.d;
  j["D"] = c.D;
  j["weights"] = c.weights;
  j["projector_residual"] = projector;
  j["block_residual"] = blocks;
  emit_json(c, j);
  if (projector > 1e-10 || blocks > 1e-10) return kExitConsistency;
  return sigma <= 3.0 ? kExitOk : kExitOracle;
}

int cmd_hnks(const RunConfig& c) {
  if (c.theta_points < 1) throw CliError{kExitInvalid, "--theta-points must be positive"};
  const std::size_t side = static_cast<std::size_t>(c.d) + 1;
  std::vector<double> re(side * side), im(side * side), fre(side * side), fim(side * side);
  std::size_t dim = 0;
  double iso_max = 0.0, unitary_dev = 0.0, fd_dev = 0.0;
  for (int k = 0; k < c.theta_points; ++k) {
    const double theta = c.theta_points == 1 ? 0.0 : M_PI * k / (c.theta_points - 1);
    for (auto family : {ISOEST_HNKS_ISOMETRY, ISOEST_HNKS_UNITARY}) {
      check(isoest_hnks_hamiltonian(theta, c.d, family, 0.0, re.data(), im.data(), re.size(),
                                    &dim));
      check(isoest_hnks_hamiltonian(theta, c.d, family, 1e-5, fre.data(), fim.data(),
                                    fre.size(), &dim));
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          const std::size_t at = i * dim + j;
          fd_dev = std::max({fd_dev, std::abs(re[at] - fre[at]), std::abs(im[at] - fim[at])});
          if (family == ISOEST_HNKS_ISOMETRY) {
            iso_max = std::max({iso_max, std::abs(re[at]), std::abs(im[at])});
          } else {
            // Reference i(|d><d-1| - |d-1><d|), 0-based labels.
            double ref_im = 0.0;
            if (i == side - 1 && j == side - 2) ref_im = 1.0;
            if (i == side - 2 && j == side - 1) ref_im = -1.0;
            unitary_dev = std::max({unitary_dev, std::abs(re[at]), std::abs(im[at] - ref_im)});
          }
        }
      }
    }
  }
  json h_re = json::array(), h_im = json::array();
  check(isoest_hnks_hamiltonian(0.0, c.d, ISOEST_HNKS_UNITARY, 0.0, re.data(), im.data(),
                                re.size(), &dim));
  for (std::size_t i = 0; i < dim; ++i) {
    json row_re = json::array(), row_im = json::array();
    for (std::size_t j = 0; j < dim; ++j) {
      row_re.push_back(re[i * dim + j] + 0.0);  // + 0.0 folds -0 into 0
      row_im.push_back(im[i * dim + j] + 0.0);
    }
    h_re.push_back(std::move(row_re));
    h_im.push_back(std::move(row_im));
  }
  json j;
  j["d"] = c.d;
  j["theta_points"] = c.theta_points;
  j["isometry_max_abs"] = iso_max;
  j["unitary_max_deviation"] = unitary_dev;
  j["finite_difference_max_deviation"] = fd_dev;
  j["basis"] = "0-indexed";
  j["unitary_hamiltonian"] = json{{"re", h_re}, {"im", h_im}};
  emit_json(c, j);
  return (iso_max <= 1e-14 && unitary_dev <= 1e-12 && fd_dev <= 1e-8) ? kExitOk
                                                                     : kExitConsistency;
}

int cmd_matrix(const RunConfig& c) {
  isoest_matrix* raw = nullptr;
  check(isoest_matrix_build(single_n(c), c.d, c.D, &raw));
  MatrixPtr m(raw);
  char* text = nullptr;
  check(isoest_matrix_dump(raw, &text));
  write_output(c, take_string(text));
  return kExitOk;
}

int cmd_diagrams(const RunConfig& c) {
  const int n = single_n(c);
  isoest_diagram_set* raw = nullptr;
  check(isoest_diagrams_enumerate(c.d, n, &raw));
  DiagramSetPtr set(raw);
  Table t;
  t.header = {"diagram", "dim_d", "dim_D", "log2_dim_D", "stab"};
  std::vector<int> rows(c.d);
  for (std::size_t i = 0; i < isoest_diagrams_count(raw); ++i) {
    check(isoest_diagrams_get(raw, i, rows.data(), rows.size()));
    char* dim_d = nullptr;
    char* dim_big = nullptr;
    char* stab = nullptr;
    double log2_big = 0.0;
    check(isoest_dim_unitary(rows.data(), rows.size(), c.d, &dim_d));
    std::string sd = take_string(dim_d);
    check(isoest_dim_unitary(rows.data(), rows.size(), c.D, &dim_big));
    std::string sD = take_string(dim_big);
    check(isoest_dim_unitary_log2(rows.data(), rows.size(), c.D, &log2_big));
    check(isoest_count_stab(rows.data(), rows.size(), &stab));
    t.rows.push_back({fmt::format("\"{}\"", fmt::join(rows, ",")), sd, sD, log2_big,
                      take_string(stab)});
  }
  emit_table(c, t);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isoest: optimal isometry estimation fidelities and program costs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(isoest_version()));
  RunConfig c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--d", c.d, "input dimension d")->check(CLI::PositiveNumber);
    sub->add_option("--D", c.D, "output dimension D")->check(CLI::PositiveNumber);
    sub->add_option("--n", c.n_list, "query counts (comma separated)")->delimiter(',');
    sub->add_option("--n-min", c.n_min, "first n of a range");
    sub->add_option("--n-max", c.n_max, "last n of a range");
    sub->add_option("--n-step", c.n_step, "range step");
    sub->add_option("--N", c.N, "window parameter N (overrides the schedule)");
    sub->add_option("--t", c.t, "schedule exponent, N = floor(n^t)");
    sub->add_option("--schedule", c.schedule, "N schedule: power | max | optimal")
        ->check(CLI::IsMember({"power", "max", "optimal"}));
    sub->add_option("--eps", c.eps, "target errors (comma separated)")->delimiter(',');
    sub->add_option("--samples", c.samples, "Monte-Carlo samples")
        ->check(CLI::Range(100LL, 1LL << 40));
    sub->add_option("--seed", c.seed, "random seed (default 0xC0FFEE)");
    sub->add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", c.out, "output file (written atomically)");
  };

  std::vector<std::pair<CLI::App*, int (*)(const RunConfig&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const RunConfig&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, fn);
    return sub;
  };

  auto* fidelity = add("fidelity", "optimal estimation fidelity F_est(n,d,D)",
                       cmd_fidelity);
  add("scan", "F_est over a range of n with extrapolation columns",
                   cmd_scan);
  auto* cost = add("cost", "program cost versus accuracy for a storage strategy",
                   cmd_cost);
  auto* oracle = add("oracle", "Monte-Carlo cross-check in the full tensor space",
                     cmd_oracle);
  auto* hnks = add("hnks", "Hamiltonian-not-in-Kraus-span check", cmd_hnks);
  add("queries", "query complexity for a target accuracy",
                      cmd_queries);
  add("sweep", "protocol bounds, achieved and optimal fidelity",
                    cmd_sweep);
  add("matrix", "dump the estimation matrix", cmd_matrix);
  add("diagrams", "Young diagrams with dimensions", cmd_diagrams);

  // The output format defaults per subcommand once parsing has finished.
  for (auto& entry : commands) add_common(entry.first);
  fidelity->add_flag("--vector", c.with_vector, "include the Perron vector");
  cost->add_option("--strategy", c.strategy, "est | pbt | cptp")
      ->check(CLI::IsMember({"est", "pbt", "cptp"}));
  cost->add_flag("--qubits", c.qubits, "add a cost_qubits column (cost_bits / 2)");
  oracle->add_option("--threads", c.threads, "worker threads (0: all cores)");
  oracle->add_option("--weights", c.weights, "perron | protocol")
      ->check(CLI::IsMember({"perron", "protocol"}));
  hnks->add_option("--theta-points", c.theta_points, "points of the theta grid on [0, pi]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  for (auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    if (c.format.empty()) {
      c.format = (sub == fidelity || sub == oracle || sub == hnks) ? "json" : "csv";
    }
    if (c.eps.empty()) c.eps = {1e-1, 1e-2, 1e-3, 1e-4};
    try {
      return fn(c);
    } catch (const CliError& e) {
      std::cerr << "isoest: " << e.message << '\n';
      return e.code;
    } catch (const std::exception& e) {
      std::cerr << "isoest: " << e.what() << '\n';
      return kExitConsistency;
    }
  }
  return kExitInvalid;
}
