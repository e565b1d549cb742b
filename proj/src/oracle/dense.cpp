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
#include <cmath>

#include <fmt/format.h>

#include "isoest/error.hpp"
#include "isoest/oracle.hpp"

namespace isoest::oracle {

long long dim_product(const std::vector<int>& dims) {
  long long p = 1;
  for (int k : dims) {
    if (k < 1) throw InvalidArgument("tensor factor dimensions must be positive");
    p *= k;
  }
  return p;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix tensor_power(const CMatrix& a, int k) {
  if (k < 0) throw InvalidArgument("tensor power must be nonnegative");
  CMatrix out = CMatrix::Identity(1, 1);
  for (int i = 0; i < k; ++i) out = kron(out, a);
  return out;
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double isometry_defect(const CMatrix& v) {
  return max_abs(v.adjoint() * v - CMatrix::Identity(v.cols(), v.cols()));
}

double projector_defect(const CMatrix& p) {
  if (p.rows() != p.cols()) throw InvalidArgument("projector must be square");
  return std::max(max_abs(p * p - p), max_abs(p - p.adjoint()));
}

void require_isometry(const CMatrix& v, double tol) {
  if (v.rows() < v.cols()) {
    throw InvalidArgument(fmt::format("isometry must have at least as many rows as "
                                      "columns (got {}x{})",
                                      v.rows(), v.cols()));
  }
  const double defect = isometry_defect(v);
  if (!(defect <= tol)) {
    throw InvalidArgument(
        fmt::format("operator is not an isometry: |V^dag V - 1|_max = {:.3e}", defect));
  }
}

}  // namespace isoest::oracle
