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

#include <cmath>

#include "treekey/math.hpp"
#include "treekey/rate.hpp"

using namespace treekey;

TEST_CASE("rate helper composes the pieces") {
  // One hop, perfect key fraction: rate = eta * 1e9 / T.
  CHECK(secret_key_rate_hz(1.0, 0.15625, 0, 104.0) ==
        doctest::Approx(0.15625e9 / 104.0).epsilon(1e-15));
  CHECK(secret_key_rate_hz(0.0, 0.9, 10, 104.0) == 0.0);
  CHECK_THROWS_AS(secret_key_rate_hz(1.0, 0.9, 0, 0.0), std::domain_error);
  CHECK_THROWS_AS(secret_key_rate_hz(1.0, 0.9, -1, 10.0), std::domain_error);
}

TEST_CASE("evaluate end to end") {
  // Tree (4,4,4), 100 km with 99 stations (1 km spacing), default hardware,
  // multiplexed. Every field frozen from an independent 40-digit evaluation
  // of the full pipeline.
  const RepeaterConfig cfg{
      TreeParams({4, 4, 4}),
      ChannelParams{100.0, 99, 20.0},
      EfficiencyParams{},
      GateTimes{},
      SchemeChoice{Scheme::multiplexed, 1},
      1e-5,
  };
  const RateResult r = evaluate(cfg);
  CHECK(r.mu == doctest::Approx(0.08634604022591319).epsilon(1e-13));
  CHECK(r.eta_t == doctest::Approx(0.9939233616067474).epsilon(1e-12));
  CHECK(r.t_gen_ns == 104.0);
  CHECK(r.eps_p == doctest::Approx(1e-3).epsilon(1e-13));
  CHECK(r.qber == doctest::Approx(0.0006666666666666666).epsilon(1e-13));
  CHECK(r.key_fraction == doctest::Approx(0.9870072797618177).epsilon(1e-12));
  CHECK(r.rate_hz == doctest::Approx(5159134.775079233).epsilon(1e-9));
  CHECK(r.emitters == 20);
  CHECK(r.n_node == 99);
}

TEST_CASE("evaluate with a rounds scheme") {
  const RepeaterConfig cfg{
      TreeParams({2, 4, 4}),
      ChannelParams{100.0, 99, 20.0},
      EfficiencyParams{},
      GateTimes{},
      SchemeChoice{Scheme::multiplexed_rounds, 2},
      1e-5,
  };
  const RateResult r = evaluate(cfg);
  CHECK(r.t_gen_ns == 98.0);
  CHECK(r.emitters == 6);
  CHECK(r.eta_t == doctest::Approx(0.9897755718707486).epsilon(1e-12));
  CHECK(r.rate_hz == doctest::Approx(3603855.602715448).epsilon(1e-9));
}

TEST_CASE("result is self-consistent") {
  // rate = f * eta^(n+1) * 1e9 / T, recomputable from the result fields.
  for (const auto& cfg : {
           RepeaterConfig{TreeParams({4, 4, 4}), ChannelParams{100.0, 99, 20.0},
                          EfficiencyParams{}, GateTimes{},
                          SchemeChoice{Scheme::multiplexed, 1}, 1e-5},
           RepeaterConfig{TreeParams({2, 4, 4}), ChannelParams{500.0, 49, 20.0},
                          EfficiencyParams{}, GateTimes{},
                          SchemeChoice{Scheme::multiplexed_rounds, 4}, 1e-4},
           RepeaterConfig{TreeParams({3, 3}), ChannelParams{50.0, 4, 20.0},
                          EfficiencyParams{}, GateTimes{},
                          SchemeChoice{Scheme::single_emitter, 1}, 1e-5},
           RepeaterConfig{TreeParams({3, 3}), ChannelParams{50.0, 4, 20.0},
                          EfficiencyParams{}, GateTimes{2.0, 12.0, 8.0, 1.5},
                          SchemeChoice{Scheme::emitter_ancilla, 1}, 1e-5},
       }) {
    const RateResult r = evaluate(cfg);
    const double recomputed =
        r.key_fraction *
        pow_int(r.eta_t, static_cast<std::uint64_t>(r.n_node) + 1) * 1e9 / r.t_gen_ns;
    CHECK(r.rate_hz == doctest::Approx(recomputed).epsilon(1e-12));
    CHECK(r.rate_hz >= 0.0);
  }
}

TEST_CASE("emitter bookkeeping per scheme") {
  RepeaterConfig cfg{
      TreeParams({3, 3}), ChannelParams{50.0, 4, 20.0}, EfficiencyParams{},
      GateTimes{}, SchemeChoice{Scheme::single_emitter, 1}, 1e-5,
  };
  CHECK(evaluate(cfg).emitters == 1);
  cfg.scheme = SchemeChoice{Scheme::emitter_ancilla, 1};
  CHECK(evaluate(cfg).emitters == 2);
  cfg.scheme = SchemeChoice{Scheme::multiplexed, 1};
  CHECK(evaluate(cfg).emitters == 4);
}

TEST_CASE("evaluate rejects impossible operating points") {
  RepeaterConfig cfg{
      TreeParams({4, 4, 4}), ChannelParams{100.0, 99, 20.0}, EfficiencyParams{},
      GateTimes{}, SchemeChoice{Scheme::multiplexed, 1}, 0.02,
  };
  // (99 + 1) * 0.02 = 2 > 1.
  CHECK_THROWS_AS(evaluate(cfg), InfeasibleError);

  cfg.eps_r = 1e-5;
  cfg.gates = GateTimes{0.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(evaluate(cfg), std::domain_error);
}

TEST_CASE("zero key fraction still evaluates") {
  // QBER past the six-state threshold: the config is admissible but yields
  // no key. rate must be exactly 0, not an error.
  const RepeaterConfig cfg{
      TreeParams({4, 4, 4}), ChannelParams{100.0, 99, 20.0}, EfficiencyParams{},
      GateTimes{}, SchemeChoice{Scheme::multiplexed, 1}, 0.003,
  };
  const RateResult r = evaluate(cfg);
  CHECK(r.eps_p == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(r.key_fraction == 0.0);
  CHECK(r.rate_hz == 0.0);
}
