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

#include "treekey/tree.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

#include "treekey/math.hpp"

namespace treekey {

TreeParams::TreeParams(std::vector<int> branching) : branching_(std::move(branching)) {
  if (branching_.size() < 2) {
    throw std::invalid_argument("tree depth must be >= 2");
  }
  for (int n : branching_) {
    if (n < 1) throw std::invalid_argument("every branching entry must be >= 1");
  }
}

std::uint64_t TreeParams::layer_photons(int layer) const {
  if (layer < 1 || layer > depth()) throw std::invalid_argument("layer out of range");
  std::uint64_t count = 1;
  for (int i = 0; i < layer; ++i) {
    std::uint64_t n = static_cast<std::uint64_t>(branching_[static_cast<std::size_t>(i)]);
    if (count > std::numeric_limits<std::uint64_t>::max() / n) {
      throw std::overflow_error("photon count overflows uint64");
    }
    count *= n;
  }
  return count;
}

std::uint64_t TreeParams::total_photons() const {
  std::uint64_t total = 0;
  for (int l = 1; l <= depth(); ++l) {
    std::uint64_t layer = layer_photons(l);
    if (total > std::numeric_limits<std::uint64_t>::max() - layer) {
      throw std::overflow_error("photon count overflows uint64");
    }
    total += layer;
  }
  return total;
}

namespace {

void check_mu(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw std::domain_error("mu must lie in [0, 1]");
}

}  // namespace

std::vector<double> indirect_z_success(const TreeParams& tree, double mu) {
  check_mu(mu);
  const int d = tree.depth();
  // r[k-1] holds R_k; the two virtual levels past the leaves are plain zeros
  // handled by branch(k) == 0 and pow_int(x, 0) == 1.
  std::vector<double> r(static_cast<std::size_t>(d) + 2, 0.0);
  for (int k = d; k >= 1; --k) {
    const double r_next = r[static_cast<std::size_t>(k) + 1];  // R_{k+2}
    const double inner =
        1.0 - (1.0 - mu) * pow_int(1.0 - mu + mu * r_next,
                                   static_cast<std::uint64_t>(tree.branch(k + 1)));
    r[static_cast<std::size_t>(k) - 1] =
        1.0 - pow_int(inner, static_cast<std::uint64_t>(tree.branch(k)));
  }
  r.resize(static_cast<std::size_t>(d));
  return r;
}

double transmission_probability(const TreeParams& tree, double mu) {
  check_mu(mu);
  const std::vector<double> r = indirect_z_success(tree, mu);
  const double r1 = r[0];
  const double r2 = r[1];  // depth >= 2 is a class invariant
  const std::uint64_t n0 = static_cast<std::uint64_t>(tree.branch(0));
  const std::uint64_t n1 = static_cast<std::uint64_t>(tree.branch(1));
  const double a = pow_int(1.0 - mu + mu * r1, n0);
  const double b = pow_int(mu * r1, n0);
  // a >= b holds in floating point, not just exactly: the bases satisfy
  // base_a = (1 - mu) + base_b with 1 - mu >= 0, and pow_int applies the
  // identical multiply sequence to both, so monotone rounding keeps the
  // order. Hence no clamp.
  assert(a >= b);
  return (a - b) * pow_int(1.0 - mu + mu * r2, n1);
}

}  // namespace treekey
