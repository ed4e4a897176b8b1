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
#include <stdexcept>

#include "treekey/channel.hpp"
#include "treekey/qkd.hpp"
#include "treekey/timing.hpp"
#include "treekey/tree.hpp"

namespace treekey {

// The requested operating point cannot produce key even in principle, e.g.
// the accumulated error (n_node + 1) eps_r exceeds 1.
struct InfeasibleError : std::domain_error {
  using std::domain_error::domain_error;
};

// One fully specified repeater chain. channel.n_node is the single source of
// the station count; the error accumulation reuses it.
struct RepeaterConfig {
  TreeParams tree;
  ChannelParams channel;
  EfficiencyParams efficiencies{};
  GateTimes gates{};
  SchemeChoice scheme{};
  double eps_r = 1e-5;
};

struct RateResult {
  double mu = 0.0;
  double eta_t = 0.0;
  double t_gen_ns = 0.0;
  double eps_p = 0.0;
  double qber = 0.0;
  double key_fraction = 0.0;
  double rate_hz = 0.0;
  std::uint64_t emitters = 0;
  int n_node = 0;
};

// f * eta_t^(n_node+1) * 1e9 / t_gen_ns. The single place where the ns -> s
// conversion happens; every rate in the library flows through here so that
// equal inputs give bit-equal outputs.
double secret_key_rate_hz(double key_fraction, double eta_t, int n_node, double t_gen_ns);

// Full pipeline: spacing -> mu -> eta_t, scheme -> (T, emitters),
// eps_r -> eps_p -> QBER -> f, then the rate. Throws InfeasibleError when
// eps_p > 1 and std::domain_error when t_gen is not positive.
RateResult evaluate(const RepeaterConfig& config);

}  // namespace treekey
