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
#include <optional>
#include <vector>

#include "treekey/rate.hpp"

namespace treekey {

// Exhaustive search space: depth in [2, d_max], every branching entry in
// [1, n_max], n_node in [0, n_node_max] subject to spacing >= min_spacing_km
// and (n_node + 1) eps_r <= 1, schemes multiplexed plus multiplexed-rounds
// for every divisor m >= 2 of n_{d-2}, filtered by the emitter budget.
struct OptimizationProblem {
  double total_distance_km = 1000.0;
  int emitter_budget = 100;
  double eps_r = 1e-5;
  double min_spacing_km = 1.0;
  int d_max = 5;
  int n_max = 24;
  // Largest station count to consider; negative derives the largest value
  // compatible with min_spacing_km.
  int n_node_max = -1;
  EfficiencyParams efficiencies{};
  GateTimes gates{};
  double l_att_km = 20.0;
  int threads = 1;
  // The prunes only ever discard configurations strictly worse than the
  // incumbent (see optimizer.cpp), so disabling them changes `evaluated`
  // but never `best`.
  bool enable_pruning = true;
};

struct BestConfig {
  RepeaterConfig config;
  RateResult result;
};

// `best` is empty when no configuration is admissible (e.g. the error bound
// excludes every station count, or the budget is below every scheme).
// `evaluated` counts configurations whose rate was actually computed; it
// depends on pruning and thread partition, `best` does not.
struct OptimizationOutcome {
  std::optional<BestConfig> best;
  std::uint64_t evaluated = 0;
};

// Maximizes the secret key rate over the space above. Ties on the rate value
// resolve by: fewer emitters, then fewer total photons, then
// lexicographically smaller branching vector (shorter prefix first), then
// smaller n_node, then multiplexed before multiplexed-rounds, then smaller m.
// The order is total, so the result is unique and independent of enumeration
// order and thread count.
OptimizationOutcome optimize(const OptimizationProblem& problem);

struct BudgetSweepRow {
  int emitter_budget = 0;
  OptimizationOutcome outcome;
};

// One optimize() per budget, everything else taken from `base`.
std::vector<BudgetSweepRow> sweep_emitters(const OptimizationProblem& base,
                                           const std::vector<int>& budgets);

struct DistanceSweepRow {
  double distance_km = 0.0;
  double eps_r = 0.0;
  GateTimes gates{};
  OptimizationOutcome outcome;
};

// Cross product in deterministic row order: gate sets outermost, then eps_r
// values, then distances.
std::vector<DistanceSweepRow> sweep_distance(const OptimizationProblem& base,
                                             const std::vector<double>& distances_km,
                                             const std::vector<double>& eps_r_values,
                                             const std::vector<GateTimes>& gate_sets);

}  // namespace treekey
