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
#include <vector>

namespace treekey {

// Branching vector (n_0, ..., n_{d-1}) of a tree graph state of depth d >= 2.
// The root is a virtual vertex that never becomes a photon; layer l in [1, d]
// holds prod_{i=0}^{l-1} n_i photons. All n_i >= 1.
class TreeParams {
 public:
  explicit TreeParams(std::vector<int> branching);

  int depth() const { return static_cast<int>(branching_.size()); }

  // n_k, with the boundary convention n_k = 0 for k >= depth. The recursion
  // below leans on this together with pow_int(x, 0) == 1.
  int branch(int k) const {
    return k < depth() ? branching_[static_cast<std::size_t>(k)] : 0;
  }

  const std::vector<int>& branching() const { return branching_; }

  // Photons in layer `layer`, 1-based.
  std::uint64_t layer_photons(int layer) const;

  // Sum over layers; throws std::overflow_error if it exceeds uint64.
  std::uint64_t total_photons() const;

 private:
  std::vector<int> branching_;
};

// Success probabilities R_k (k = 1..d, returned at index k-1) of an indirect
// Z measurement on one layer-k qubit, from the backward recursion
//
//   R_k = 1 - (1 - (1 - mu) (1 - mu + mu R_{k+2})^{n_{k+1}})^{n_k}
//
// with R_k = 0 for k >= d (a layer-d qubit has no children, so n_d = 0 makes
// the outer power equal 1). In particular R_{d-1} = 1 - mu^{n_{d-1}}.
std::vector<double> indirect_z_success(const TreeParams& tree, double mu);

// Transmission probability of the encoded qubit across one hop,
//
//   eta_t = ((1 - mu + mu R_1)^{n_0} - (mu R_1)^{n_0}) (1 - mu + mu R_2)^{n_1}.
//
// The bracket is non-negative by construction: both powers are evaluated by
// pow_int with an identical operation sequence, and the first base dominates
// the second ((1-mu) + mu R_1 >= mu R_1 exactly, since 1 - mu >= 0), so
// monotone rounding preserves the ordering. Asserted, never clamped.
double transmission_probability(const TreeParams& tree, double mu);

}  // namespace treekey
