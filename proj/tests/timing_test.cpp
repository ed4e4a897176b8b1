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

#include <stdexcept>
#include <string>
#include <vector>

#include "treekey/timing.hpp"

using namespace treekey;

namespace {
const GateTimes kTable{1.0, 10.0, 10.0, 1.0};
const SchemeChoice kSingle{Scheme::single_emitter, 1};
const SchemeChoice kTwo{Scheme::emitter_ancilla, 1};
const SchemeChoice kMux{Scheme::multiplexed, 1};
}  // namespace

TEST_CASE("generation time anchors") {
  // Hand-expanded sums with the table gate times; all terms are integers so
  // the doubles are exact.
  CHECK(generation_time_ns(TreeParams({4, 4, 4}), kTable, kMux) == 104.0);
  CHECK(generation_time_ns(TreeParams({2, 2, 2}), kTable, kTwo) == 128.0);
  CHECK(generation_time_ns(TreeParams({2, 2, 2}), kTable, kSingle) == 108.0);
  CHECK(generation_time_ns(TreeParams({2, 4, 4}), kTable,
                           SchemeChoice{Scheme::multiplexed_rounds, 2}) == 98.0);

  // Depth 2: empty sums collapse most terms.
  CHECK(generation_time_ns(TreeParams({3, 5}), kTable, kMux) == 45.0);
  CHECK(generation_time_ns(TreeParams({3, 5}), kTable, kSingle) == 45.0);
  CHECK(generation_time_ns(TreeParams({3, 5}), kTable, kTwo) == 75.0);
}

TEST_CASE("rounds with m=1 equals plain multiplexed bitwise") {
  const GateTimes odd{1.3, 9.7, 11.1, 0.8};
  for (const auto& b : {std::vector<int>{3, 6, 4}, {2, 2}, {5, 3, 2, 4}}) {
    const TreeParams t(b);
    CHECK(generation_time_ns(t, odd, SchemeChoice{Scheme::multiplexed_rounds, 1}) ==
          generation_time_ns(t, odd, kMux));
    CHECK(emitter_count(t, SchemeChoice{Scheme::multiplexed_rounds, 1}) ==
          emitter_count(t, kMux));
  }
}

TEST_CASE("emitter counts") {
  CHECK(emitter_count(TreeParams({4, 4, 4}), kMux) == 20);
  CHECK(emitter_count(TreeParams({2, 4, 4}), SchemeChoice{Scheme::multiplexed_rounds, 2}) == 6);
  CHECK(emitter_count(TreeParams({4, 4, 4}), kSingle) == 1);
  CHECK(emitter_count(TreeParams({4, 4, 4}), kTwo) == 2);
  // Depth 2 empty product: one unit of n_0 + 1 emitters.
  CHECK(emitter_count(TreeParams({3, 5}), kMux) == 4);
  CHECK(emitter_count(TreeParams({2, 2, 2, 2}), kMux) == 4 * 3);
  CHECK(emitter_count(TreeParams({4, 8, 4}), SchemeChoice{Scheme::multiplexed_rounds, 2}) == 20);
}

TEST_CASE("rounds divisibility") {
  const TreeParams t({2, 4, 4});  // n_{d-2} = 4
  CHECK_THROWS_AS(generation_time_ns(t, kTable, SchemeChoice{Scheme::multiplexed_rounds, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(emitter_count(t, SchemeChoice{Scheme::multiplexed_rounds, 0}),
                  std::invalid_argument);
  CHECK_NOTHROW(generation_time_ns(t, kTable, SchemeChoice{Scheme::multiplexed_rounds, 4}));
}

TEST_CASE("scheme time ordering for branching >= 2") {
  // multiplexed <= single <= two-emitter over all trees with d in {3, 4} and
  // n_i in {2, 3, 4}. Known to fail at n_i = 1, which is why the grid starts
  // at 2.
  std::vector<std::vector<int>> trees;
  for (int a = 2; a <= 4; ++a)
    for (int b = 2; b <= 4; ++b)
      for (int c = 2; c <= 4; ++c) {
        trees.push_back({a, b, c});
        for (int d = 2; d <= 4; ++d) trees.push_back({a, b, c, d});
      }
  for (const auto& b : trees) {
    const TreeParams t(b);
    const double mux = generation_time_ns(t, kTable, kMux);
    const double single = generation_time_ns(t, kTable, kSingle);
    const double two = generation_time_ns(t, kTable, kTwo);
    CHECK(mux <= single);
    CHECK(single <= two);
  }
}

TEST_CASE("beta only enters the two-emitter scheme") {
  const TreeParams t({2, 2, 2});
  GateTimes g = kTable;
  g.beta = 2.5;
  CHECK(generation_time_ns(t, g, kTwo) - generation_time_ns(t, g, kSingle) ==
        doctest::Approx(2.5 * 2 * 10.0).epsilon(1e-15));
  CHECK(generation_time_ns(t, g, kSingle) == generation_time_ns(t, kTable, kSingle));
  CHECK(generation_time_ns(t, g, kMux) == generation_time_ns(t, kTable, kMux));
}

TEST_CASE("gate time validation") {
  GateTimes g = kTable;
  g.t_cz_ns = -1.0;
  CHECK_THROWS_AS(generation_time_ns(TreeParams({2, 2}), g, kMux), std::domain_error);
  CHECK(scheme_name(Scheme::multiplexed) == std::string("multiplexed"));
  CHECK(scheme_name(Scheme::multiplexed_rounds) == std::string("multiplexed-rounds"));
  CHECK(scheme_name(Scheme::single_emitter) == std::string("single-emitter"));
  CHECK(scheme_name(Scheme::emitter_ancilla) == std::string("emitter-ancilla"));
}
