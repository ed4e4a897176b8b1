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

#include "doctest.h"

#include <optional>
#include <vector>

#include "brute_force.hpp"
#include "treekey/optimizer.hpp"

using namespace treekey;
using treekey_test::brute_force;

namespace {

void check_same(const std::optional<BestConfig>& a, const std::optional<BestConfig>& b) {
  REQUIRE(a.has_value() == b.has_value());
  if (!a) return;
  CHECK(a->result.rate_hz == b->result.rate_hz);  // bit-equal, not approx
  CHECK(a->config.tree.branching() == b->config.tree.branching());
  CHECK(a->config.channel.n_node == b->config.channel.n_node);
  CHECK(a->config.scheme.kind == b->config.scheme.kind);
  CHECK(a->config.scheme.rounds == b->config.scheme.rounds);
  CHECK(a->result.emitters == b->result.emitters);
}

}  // namespace

TEST_CASE("optimizer equals brute force on small grids") {
  OptimizationProblem p;
  p.total_distance_km = 50.0;
  p.emitter_budget = 10;
  p.eps_r = 1e-5;
  p.d_max = 3;
  p.n_max = 3;
  p.n_node_max = 3;
  check_same(optimize(p).best, brute_force(p));

  p.total_distance_km = 120.0;
  p.emitter_budget = 14;
  p.eps_r = 1e-4;
  p.n_max = 4;
  p.n_node_max = 6;
  check_same(optimize(p).best, brute_force(p));
}

TEST_CASE("pruning and threading change nothing but the work count") {
  OptimizationProblem p;
  p.total_distance_km = 300.0;
  p.emitter_budget = 30;
  p.d_max = 4;
  p.n_max = 5;
  p.n_node_max = 20;

  const OptimizationOutcome pruned = optimize(p);
  p.enable_pruning = false;
  const OptimizationOutcome full = optimize(p);
  p.enable_pruning = true;
  p.threads = 3;
  const OptimizationOutcome threaded = optimize(p);

  check_same(pruned.best, full.best);
  check_same(pruned.best, threaded.best);
  CHECK(full.evaluated >= pruned.evaluated);
  CHECK(full.evaluated > 0);

  // And all three agree with the naive reference.
  p.threads = 1;
  p.enable_pruning = true;
  check_same(pruned.best, brute_force(p));
}

TEST_CASE("degenerate all-zero-rate search still has a canonical winner") {
  OptimizationProblem p;
  p.total_distance_km = 10.0;
  p.emitter_budget = 10;
  p.eps_r = 0.5;  // QBER far past the six-state threshold for every n
  p.d_max = 3;
  p.n_max = 3;
  p.n_node_max = 1;

  const OptimizationOutcome out = optimize(p);
  REQUIRE(out.best.has_value());
  CHECK(out.best->result.rate_hz == 0.0);
  // Tie-break picks the cheapest, smallest, lexicographically first config.
  CHECK(out.best->config.tree.branching() == std::vector<int>{1, 1});
  CHECK(out.best->config.channel.n_node == 0);
  CHECK(out.best->config.scheme.kind == Scheme::multiplexed);
  CHECK(out.best->config.scheme.rounds == 1);
  CHECK(out.best->result.emitters == 2);
  check_same(out.best, brute_force(p));
}

TEST_CASE("searches with nothing admissible report no best") {
  OptimizationProblem p;
  p.total_distance_km = 100.0;
  p.emitter_budget = 1;  // every scheme needs at least 2 emitters
  p.n_node_max = 5;
  CHECK(!optimize(p).best.has_value());
  CHECK(optimize(p).evaluated == 0);

  p.emitter_budget = 100;
  p.total_distance_km = 0.5;  // below the minimum spacing for every n_node
  p.n_node_max = -1;
  CHECK(!optimize(p).best.has_value());

  p.total_distance_km = 100.0;
  p.eps_r = 1.5;  // even n_node = 0 exceeds eps_p = 1
  CHECK(!optimize(p).best.has_value());
}

TEST_CASE("rate is non-decreasing in the emitter budget") {
  OptimizationProblem p;
  p.total_distance_km = 200.0;
  p.d_max = 3;
  p.n_max = 6;
  const auto rows = sweep_emitters(p, {6, 12, 24, 48});
  REQUIRE(rows.size() == 4);
  double prev = 0.0;
  for (const auto& row : rows) {
    REQUIRE(row.outcome.best.has_value());
    CHECK(row.outcome.best->result.rate_hz >= prev);
    prev = row.outcome.best->result.rate_hz;
  }
  CHECK(rows[0].emitter_budget == 6);
  CHECK(rows[3].emitter_budget == 48);
}

TEST_CASE("distance sweep row order is gates, eps, distance") {
  OptimizationProblem p;
  p.emitter_budget = 8;
  p.d_max = 2;
  p.n_max = 3;
  GateTimes fast{};
  GateTimes slow{};
  slow.t_e_ns = 100.0;
  slow.t_cz_ns = 100.0;

  const auto rows = sweep_distance(p, {100.0, 200.0}, {1e-5, 1e-4}, {fast, slow});
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].gates.t_e_ns == 10.0);
  CHECK(rows[4].gates.t_e_ns == 100.0);
  CHECK(rows[0].eps_r == 1e-5);
  CHECK(rows[2].eps_r == 1e-4);
  CHECK(rows[0].distance_km == 100.0);
  CHECK(rows[1].distance_km == 200.0);
  // Slower gates can never beat faster ones, cell by cell.
  for (int i = 0; i < 4; ++i) {
    const double fast_rate = rows[static_cast<std::size_t>(i)].outcome.best->result.rate_hz;
    const double slow_rate = rows[static_cast<std::size_t>(i) + 4].outcome.best->result.rate_hz;
    CHECK(slow_rate <= fast_rate);
  }
}

TEST_CASE("explicit n_node bounds are honored") {
  OptimizationProblem p;
  p.total_distance_km = 10.0;
  p.emitter_budget = 10;
  p.d_max = 2;
  p.n_max = 3;
  p.n_node_max = 0;
  const auto out = optimize(p);
  REQUIRE(out.best.has_value());
  CHECK(out.best->config.channel.n_node == 0);

  p.n_node_max = -1;  // derived from min spacing: at most 9 stations
  const auto derived = optimize(p);
  REQUIRE(derived.best.has_value());
  CHECK(derived.best->config.channel.n_node <= 9);
}

TEST_CASE("problem validation") {
  OptimizationProblem p;
  p.d_max = 7;
  CHECK_THROWS_AS(optimize(p), std::invalid_argument);
  p.d_max = 1;
  CHECK_THROWS_AS(optimize(p), std::invalid_argument);
  p.d_max = 5;
  p.threads = 0;
  CHECK_THROWS_AS(optimize(p), std::invalid_argument);
  p.threads = 1;
  p.min_spacing_km = 0.0;
  p.n_node_max = -1;
  CHECK_THROWS_AS(optimize(p), std::invalid_argument);
  p.min_spacing_km = 1.0;
  p.n_max = 0;
  CHECK_THROWS_AS(optimize(p), std::invalid_argument);
}
