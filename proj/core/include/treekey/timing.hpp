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

#include <cstdint>

#include "treekey/tree.hpp"

namespace treekey {

struct GateTimes {
  double t_p_ns = 1.0;    // photon emission
  double t_e_ns = 10.0;   // emitter-emitter gate / emitter measurement slot
  double t_cz_ns = 10.0;  // emitter-photon CZ
  double beta = 1.0;      // feedback-delay weight, two-emitter scheme only
};

// Generation strategies for one tree.
//  single_emitter:     one emitter builds the whole tree.
//  emitter_ancilla:    one emitter plus one ancilla, beta-weighted feedback.
//  multiplexed:        prod_{i<=d-3} n_i parallel units of n_{d-2}+1 emitters.
//  multiplexed_rounds: multiplexed variant that reuses each unit's emitters
//                      over m rounds; m must divide n_{d-2}.
enum class Scheme { single_emitter, emitter_ancilla, multiplexed, multiplexed_rounds };

struct SchemeChoice {
  Scheme kind = Scheme::multiplexed;
  int rounds = 1;  // m; meaningful for multiplexed_rounds, ignored otherwise
};

// Stable names used in CSV output and CLI flags: "single-emitter",
// "emitter-ancilla", "multiplexed", "multiplexed-rounds".
const char* scheme_name(Scheme kind);

// Tree generation time in ns for the chosen scheme.
//
// With P_l = prod_{i=0}^{l} n_i and empty sums equal to 0:
//   two-emitter:  P_{d-1} t_p + (beta n_0 + sum_{l=1}^{d-2} P_l) t_e
//                 + sum_{l=0}^{d-2} P_l t_cz
//   one-emitter:  same without the beta n_0 t_e term
//   multiplexed:  n_{d-1} t_p + sum_{i=0}^{d-2} (n_i t_cz + t_e)
//   rounds (m):   m (n_{d-1} t_p + (n_{d-2}/m) t_cz + t_e)
//                 + sum_{i=0}^{d-3} (n_i t_cz + t_e)
//
// m = 1 reproduces the multiplexed expression term for term. For n_i >= 2 the
// multiplexed time is never above the single-emitter time, which is never
// above the two-emitter time (beta >= 0); at n_i = 1 the first ordering can
// flip, e.g. branching (1,1,1) gives T_mux = t_p + 2 t_cz + 2 t_e but
// T_single = t_p + 2 t_cz + t_e.
double generation_time_ns(const TreeParams& tree, const GateTimes& gates, const SchemeChoice& scheme);

// Emitters consumed by the scheme: 1, 2, prod_{i=0}^{d-3} n_i (n_{d-2} + 1),
// or prod_{i=0}^{d-3} n_i (n_{d-2}/m + 1). For d = 2 the product is empty
// (= 1), so multiplexed uses n_0 + 1; that choice is a convention, not forced
// by the formulas.
std::uint64_t emitter_count(const TreeParams& tree, const SchemeChoice& scheme);

}  // namespace treekey
