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

#include "treekey/timing.hpp"

#include <stdexcept>

namespace treekey {

namespace {

void check_gates(const GateTimes& g) {
  if (!(g.t_p_ns >= 0.0 && g.t_e_ns >= 0.0 && g.t_cz_ns >= 0.0 && g.beta >= 0.0)) {
    throw std::domain_error("gate times and beta must be >= 0");
  }
}

// m must divide n_{d-2}; returns n_{d-2} / m.
int rounds_quotient(const TreeParams& tree, int m) {
  const int n = tree.branch(tree.depth() - 2);
  if (m < 1) throw std::invalid_argument("rounds m must be >= 1");
  if (n % m != 0) throw std::invalid_argument("rounds m must divide n_{d-2}");
  return n / m;
}

}  // namespace

const char* scheme_name(Scheme kind) {
  switch (kind) {
    case Scheme::single_emitter: return "single-emitter";
    case Scheme::emitter_ancilla: return "emitter-ancilla";
    case Scheme::multiplexed: return "multiplexed";
    case Scheme::multiplexed_rounds: return "multiplexed-rounds";
  }
  throw std::invalid_argument("unknown scheme");
}

double generation_time_ns(const TreeParams& tree, const GateTimes& gates,
                          const SchemeChoice& scheme) {
  check_gates(gates);
  const int d = tree.depth();

  switch (scheme.kind) {
    case Scheme::single_emitter:
    case Scheme::emitter_ancilla: {
      // Running products P_l = n_0 ... n_l feed three sums; the tail of the
      // photon count doubles as the emission term.
      double prod = 1.0;
      double sum_e = 0.0;   // sum_{l=1}^{d-2} P_l
      double sum_cz = 0.0;  // sum_{l=0}^{d-2} P_l
      for (int l = 0; l <= d - 2; ++l) {
        prod *= static_cast<double>(tree.branch(l));
        sum_cz += prod;
        if (l >= 1) sum_e += prod;
      }
      prod *= static_cast<double>(tree.branch(d - 1));
      if (scheme.kind == Scheme::emitter_ancilla) {
        sum_e += gates.beta * static_cast<double>(tree.branch(0));
      }
      return prod * gates.t_p_ns + sum_e * gates.t_e_ns + sum_cz * gates.t_cz_ns;
    }

    case Scheme::multiplexed: {
      double t = static_cast<double>(tree.branch(d - 1)) * gates.t_p_ns;
      for (int i = 0; i <= d - 2; ++i) {
        t += static_cast<double>(tree.branch(i)) * gates.t_cz_ns + gates.t_e_ns;
      }
      return t;
    }

    case Scheme::multiplexed_rounds: {
      const int q = rounds_quotient(tree, scheme.rounds);
      if (scheme.rounds == 1) {
        // Identical formula; reuse the multiplexed summation order so the
        // two evaluate bit-equal, not merely mathematically equal.
        return generation_time_ns(tree, gates, SchemeChoice{Scheme::multiplexed, 1});
      }
      double t = static_cast<double>(scheme.rounds) *
                 (static_cast<double>(tree.branch(d - 1)) * gates.t_p_ns +
                  static_cast<double>(q) * gates.t_cz_ns + gates.t_e_ns);
      for (int i = 0; i <= d - 3; ++i) {
        t += static_cast<double>(tree.branch(i)) * gates.t_cz_ns + gates.t_e_ns;
      }
      return t;
    }
  }
  throw std::invalid_argument("unknown scheme");
}

std::uint64_t emitter_count(const TreeParams& tree, const SchemeChoice& scheme) {
  const int d = tree.depth();
  switch (scheme.kind) {
    case Scheme::single_emitter:
      return 1;
    case Scheme::emitter_ancilla:
      return 2;
    case Scheme::multiplexed:
    case Scheme::multiplexed_rounds: {
      const int per_unit =
          scheme.kind == Scheme::multiplexed
              ? tree.branch(d - 2) + 1
              : rounds_quotient(tree, scheme.rounds) + 1;
      // Empty product for d = 2: a single unit of n_0 + 1 emitters.
      std::uint64_t units = 1;
      for (int i = 0; i <= d - 3; ++i) {
        units *= static_cast<std::uint64_t>(tree.branch(i));
      }
      return units * static_cast<std::uint64_t>(per_unit);
    }
  }
  throw std::invalid_argument("unknown scheme");
}

}  // namespace treekey
