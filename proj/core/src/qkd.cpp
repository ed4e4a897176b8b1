// Copyright 2026 The treekey authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "treekey/qkd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treekey {

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("binary_entropy domain is [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double qber_from_error(double eps_p) {
  if (!(eps_p >= 0.0 && eps_p <= 1.0)) {
    throw std::domain_error("eps_p must lie in [0, 1]");
  }
  return 2.0 * eps_p / 3.0;
}

double key_fraction_unclamped(double qber) {
  if (!(qber >= 0.0 && qber <= 2.0 / 3.0)) {
    throw std::domain_error("qber must lie in [0, 2/3]");
  }
  // qber == 0 gives exactly 1: both entropies vanish and the products are
  // exact in floating point.
  const double inner = (1.0 - 1.5 * qber) / (1.0 - qber);
  return (1.0 - qber) * (1.0 - binary_entropy(inner)) - binary_entropy(qber);
}

double key_fraction(double qber) {
  return std::max(key_fraction_unclamped(qber), 0.0);
}

bool SingleQubitState::is_valid(double tol) const {
  const std::complex<double> a = m[0], b = m[1], c = m[2], d = m[3];
  if (std::abs(a.imag()) > tol || std::abs(d.imag()) > tol) return false;
  if (std::abs(b - std::conj(c)) > tol) return false;
  if (std::abs(a.real() + d.real() - 1.0) > tol) return false;
  // Hermitian 2x2: eigenvalues (t +- sqrt(t^2 - 4 det)) / 2 are real.
  const double t = a.real() + d.real();
  const double det = (a * d - b * c).real();
  const double disc = std::max(t * t - 4.0 * det, 0.0);
  const double lambda_min = 0.5 * (t - std::sqrt(disc));
  return lambda_min >= -tol;
}

SingleQubitState zero_state() {
  return SingleQubitState{{{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}}};
}

SingleQubitState plus_state() {
  return SingleQubitState{{{{0.5, 0.0}, {0.5, 0.0}, {0.5, 0.0}, {0.5, 0.0}}}};
}

SingleQubitState plus_i_state() {
  return SingleQubitState{{{{0.5, 0.0}, {0.0, -0.5}, {0.0, 0.5}, {0.5, 0.0}}}};
}

SingleQubitState depolarize(const SingleQubitState& rho, double eps_p) {
  if (!(eps_p >= 0.0 && eps_p <= 1.0)) {
    throw std::domain_error("eps_p must lie in [0, 1]");
  }
  if (!rho.is_valid(1e-9)) {
    throw std::domain_error("rho is not a valid density matrix");
  }
  // Summing the three Pauli conjugations
  //   X rho X = {d, c, b, a},  Y rho Y = {d, -c, -b, a},  Z rho Z = {a, -b, -c, d}
  // gives {a + 2d, -b, -c, 2a + d}.
  const std::complex<double> a = rho.m[0], b = rho.m[1], c = rho.m[2], d = rho.m[3];
  const double keep = 1.0 - eps_p;
  const double mix = eps_p / 3.0;
  return SingleQubitState{{{
      keep * a + mix * (a + 2.0 * d),
      keep * b + mix * (-b),
      keep * c + mix * (-c),
      keep * d + mix * (2.0 * a + d),
  }}};
}

double state_overlap(const SingleQubitState& a, const SingleQubitState& b) {
  // Tr(a b) with both operands Hermitian is real; take the real part to shed
  // rounding residue.
  return (a.m[0] * b.m[0] + a.m[1] * b.m[2] + a.m[2] * b.m[1] + a.m[3] * b.m[3]).real();
}

}  // namespace treekey
