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

#include "treekey/mc_oracle.hpp"

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace treekey {

namespace {

// Samples are drawn in blocks of this size. Each block owns an independent
// PRNG stream derived from (seed, block index), and block success counts are
// merged as integers, so the estimate depends only on (seed, samples), never
// on how blocks are spread over workers.
constexpr std::uint64_t kBlockSize = 4096;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
  return splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (block + 1)));
}

// Top 53 bits, uniform in [0, 1). Hand-rolled instead of
// std::bernoulli_distribution because the standard does not pin that
// distribution's algorithm down, and these streams must be reproducible
// byte for byte across implementations of the standard library.
double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Presence bits of a (sub)tree with local branching vector `branching`:
// level[li] describes the nodes li + 1 levels below the sampled root, the
// root itself is not sampled. Level sizes multiply up the branching.
struct PresenceBuffer {
  std::vector<int> branching;
  std::vector<std::vector<std::uint8_t>> level;

  explicit PresenceBuffer(std::vector<int> b) : branching(std::move(b)) {
    std::uint64_t size = 1;
    level.reserve(branching.size());
    for (int n : branching) {
      size *= static_cast<std::uint64_t>(n);
      level.emplace_back(static_cast<std::size_t>(size));
    }
  }

  // Fill order is part of the reproducibility contract: levels ascending,
  // indices ascending, one uniform draw per photon.
  void sample(std::mt19937_64& eng, double mu) {
    for (auto& lv : level) {
      for (auto& bit : lv) bit = uniform01(eng) >= mu ? 1 : 0;
    }
  }

  bool present(std::size_t li, std::uint64_t j) const {
    return level[li][static_cast<std::size_t>(j)] != 0;
  }

  int child_count(std::size_t li) const {
    return li + 1 < branching.size() ? branching[li + 1] : 0;
  }

  // Indirect Z on node (li, j): some child is present and all of that
  // child's own children are recoverable in Z.
  bool indirect_z(std::size_t li, std::uint64_t j) const {
    const int nc = child_count(li);
    for (std::uint64_t c = j * nc; c < (j + 1) * nc; ++c) {
      if (present(li + 1, c) && children_z_recoverable(li + 1, c)) return true;
    }
    return false;
  }

  bool z_recoverable(std::size_t li, std::uint64_t j) const {
    return present(li, j) || indirect_z(li, j);
  }

  bool children_z_recoverable(std::size_t li, std::uint64_t j) const {
    const int nc = child_count(li);
    for (std::uint64_t c = j * nc; c < (j + 1) * nc; ++c) {
      if (!z_recoverable(li + 1, c)) return false;
    }
    return true;
  }

  // Indirect Z on the unsampled root, whose children are level 0.
  bool root_indirect_z() const {
    for (std::uint64_t c = 0; c < level[0].size(); ++c) {
      if (present(0, c) && children_z_recoverable(0, c)) return true;
    }
    return false;
  }

  // Decoding rule for full transmission; see mc_oracle.hpp.
  bool transmission_success() const {
    const std::uint64_t n0 = level[0].size();
    std::uint64_t first = n0;
    for (std::uint64_t j = 0; j < n0; ++j) {
      if (present(0, j)) {
        first = j;
        break;
      }
    }
    if (first == n0) return false;
    for (std::uint64_t j = 0; j < n0; ++j) {
      if (!z_recoverable(0, j)) return false;
    }
    return children_z_recoverable(0, first);
  }
};

template <typename Predicate>
McEstimate run_blocks(const std::vector<int>& branching, double mu, const McConfig& cfg,
                      Predicate&& pred) {
  if (cfg.samples == 0) throw std::invalid_argument("samples must be >= 1");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (!(mu >= 0.0 && mu <= 1.0)) throw std::domain_error("mu must lie in [0, 1]");

  const std::uint64_t blocks = (cfg.samples + kBlockSize - 1) / kBlockSize;

  auto count_range = [&](std::uint64_t b_begin, std::uint64_t b_end) {
    PresenceBuffer buf(branching);
    std::uint64_t hits = 0;
    for (std::uint64_t b = b_begin; b < b_end; ++b) {
      std::mt19937_64 eng(block_seed(cfg.seed, b));
      const std::uint64_t in_block =
          b + 1 < blocks ? kBlockSize : cfg.samples - b * kBlockSize;
      for (std::uint64_t s = 0; s < in_block; ++s) {
        buf.sample(eng, mu);
        if (pred(buf)) ++hits;
      }
    }
    return hits;
  };

  std::uint64_t successes = 0;
  const int workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(cfg.workers), blocks));
  if (workers <= 1) {
    successes = count_range(0, blocks);
  } else {
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = blocks * static_cast<std::uint64_t>(w) / workers;
      const std::uint64_t hi = blocks * (static_cast<std::uint64_t>(w) + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { partial[static_cast<std::size_t>(w)] = count_range(lo, hi); });
    }
    for (auto& t : pool) t.join();
    for (std::uint64_t p : partial) successes += p;
  }

  McEstimate out;
  out.successes = successes;
  out.samples = cfg.samples;
  out.estimate = static_cast<double>(successes) / static_cast<double>(cfg.samples);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) /
                            static_cast<double>(cfg.samples));
  return out;
}

}  // namespace

McEstimate mc_indirect_z(const TreeParams& tree, double mu, int layer, const McConfig& cfg) {
  if (layer < 1 || layer > tree.depth()) {
    throw std::invalid_argument("layer must lie in [1, depth]");
  }
  // The subtree below one layer-`layer` qubit branches as
  // (n_layer, ..., n_{d-1}). A bottom-layer qubit has no children: indirect
  // Z is impossible and no randomness is consumed.
  std::vector<int> sub(tree.branching().begin() + layer, tree.branching().end());
  if (sub.empty()) {
    if (cfg.samples == 0) throw std::invalid_argument("samples must be >= 1");
    return McEstimate{0.0, 0.0, 0, cfg.samples};
  }
  return run_blocks(sub, mu, cfg,
                    [](const PresenceBuffer& buf) { return buf.root_indirect_z(); });
}

McEstimate mc_transmission(const TreeParams& tree, double mu, const McConfig& cfg) {
  return run_blocks(tree.branching(), mu, cfg,
                    [](const PresenceBuffer& buf) { return buf.transmission_success(); });
}

}  // namespace treekey
