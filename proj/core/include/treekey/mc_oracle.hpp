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

// Direct Monte-Carlo sampler over per-photon loss patterns. It shares no
// arithmetic with the closed-form recursion, which is the point: it is the
// independent check that the analytic transmission probability is right.
struct McConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  // Worker threads. Samples are drawn in fixed-size blocks with
  // block-derived PRNG streams and merged as integer counts, so the
  // estimate is bit-identical for any worker count.
  int workers = 1;
};

struct McEstimate {
  double estimate = 0.0;
  // Binomial standard error sqrt(p(1-p)/n) at p = estimate; exactly 0 when
  // every sample agrees, in which case a comparison must demand equality.
  double std_error = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t samples = 0;
};

// Estimates R_layer: the probability that an indirect Z measurement on one
// layer-`layer` qubit succeeds, layer in [1, depth]. Samples presence of the
// qubit's descendants only (its own presence does not enter).
McEstimate mc_indirect_z(const TreeParams& tree, double mu, int layer, const McConfig& cfg);

// Estimates eta_t by sampling presence of every photon in the tree and
// replaying the decoding rule:
//   - at least one layer-1 qubit must be present;
//   - the first present layer-1 qubit (in index order) is measured directly,
//     which requires indirect Z on each of its children;
//   - every other layer-1 qubit needs presence or a successful indirect Z.
// Which present qubit is picked does not change the success probability
// (the choice reads only layer-1 presence bits, so the chosen subtree stays
// unconditioned), and this rule reproduces the closed form exactly.
McEstimate mc_transmission(const TreeParams& tree, double mu, const McConfig& cfg);

}  // namespace treekey
