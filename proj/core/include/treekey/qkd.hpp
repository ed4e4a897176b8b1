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

#pragma once

#include <array>
#include <complex>

namespace treekey {

// Shannon binary entropy h(x) = -x log2 x - (1-x) log2 (1-x), with
// h(0) = h(1) = 0. Domain [0, 1].
double binary_entropy(double x);

// Accumulated depolarizing error over the chain.
struct ErrorParams {
  double eps_r = 1e-5;  // per-station error probability
  int n_node = 0;

  // First-order accumulation (n_node + 1) * eps_r. Values above 1 mean the
  // linearized model left its validity range; callers reject them.
  double eps_p() const { return static_cast<double>(n_node + 1) * eps_r; }
};

// QBER of the depolarized qubit, Q = 2 eps_p / 3. Domain eps_p in [0, 1].
double qber_from_error(double eps_p);

// One-way six-state secret key fraction
//   f(Q) = (1 - Q) (1 - h((1 - 3Q/2) / (1 - Q))) - h(Q)
// without the floor at zero; negative values mean no key. Domain [0, 2/3].
// Its unique zero crossing sits near Q ~ 0.126.
double key_fraction_unclamped(double qber);

// max(key_fraction_unclamped, 0).
double key_fraction(double qber);

// Single-qubit density matrix, row-major {rho00, rho01, rho10, rho11}.
struct SingleQubitState {
  std::array<std::complex<double>, 4> m;

  // Hermitian, unit trace, positive semidefinite (via the closed-form 2x2
  // eigenvalues), all within tol.
  bool is_valid(double tol = 1e-12) const;
};

SingleQubitState zero_state();    // |0><0|
SingleQubitState plus_state();    // |+><+|
SingleQubitState plus_i_state();  // |+i><+i|

// Depolarizing channel
//   rho -> (1 - eps_p) rho + eps_p/3 (X rho X + Y rho Y + Z rho Z),
// eps_p in [0, 1]. Sends any of the six cardinal states to flip probability
// 2 eps_p / 3 in its own basis.
SingleQubitState depolarize(const SingleQubitState& rho, double eps_p);

// Re Tr(a b). For b a pure state |psi><psi| this is <psi| a |psi>, so the
// basis flip probability of a state against its ideal is 1 - state_overlap.
double state_overlap(const SingleQubitState& a, const SingleQubitState& b);

}  // namespace treekey
