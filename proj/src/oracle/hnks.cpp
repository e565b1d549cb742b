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

#include "isoest/error.hpp"
#include "isoest/oracle.hpp"

namespace isoest::oracle {

namespace {

void check_family(double theta, int d) {
  if (d < 2) throw InvalidArgument("the HNKS family needs d >= 2");
  if (!std::isfinite(theta)) throw InvalidArgument("theta must be finite");
}

Eigen::Index columns(int d, HnksFamily family) {
  return family == HnksFamily::Isometry ? d : d + 1;
}

}  // namespace

CMatrix hnks_family(double theta, int d, HnksFamily family) {
  check_family(theta, d);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  CMatrix v = CMatrix::Identity(d + 1, columns(d, family));
  v(d - 1, d - 1) = c;
  v(d, d - 1) = s;
  if (family == HnksFamily::Unitary) {
    v(d - 1, d) = -s;
    v(d, d) = c;
  }
  return v;
}

CMatrix hnks_family_derivative(double theta, int d, HnksFamily family) {
  check_family(theta, d);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  CMatrix dv = CMatrix::Zero(d + 1, columns(d, family));
  dv(d - 1, d - 1) = -s;
  dv(d, d - 1) = c;
  if (family == HnksFamily::Unitary) {
    dv(d - 1, d) = -c;
    dv(d, d) = -s;
  }
  return dv;
}

CMatrix hnks_hamiltonian(double theta, int d, HnksFamily family) {
  const Complex i(0.0, 1.0);
  return i * (hnks_family(theta, d, family).adjoint() *
              hnks_family_derivative(theta, d, family));
}

CMatrix hnks_hamiltonian_fd(double theta, int d, HnksFamily family, double h) {
  if (!(h > 0.0)) throw InvalidArgument("finite-difference step must be positive");
  const CMatrix dv =
      (hnks_family(theta + h, d, family) - hnks_family(theta - h, d, family)) / (2.0 * h);
  const Complex i(0.0, 1.0);
  return i * (hnks_family(theta, d, family).adjoint() * dv);
}

CMatrix hnks_unitary_reference(int d) {
  if (d < 2) throw InvalidArgument("the HNKS family needs d >= 2");
  CMatrix h = CMatrix::Zero(d + 1, d + 1);
  const Complex i(0.0, 1.0);
  h(d, d - 1) = i;
  h(d - 1, d) = -i;
  return h;
}

}  // namespace isoest::oracle
