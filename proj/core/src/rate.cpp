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

#include "treekey/rate.hpp"

#include "treekey/math.hpp"

namespace treekey {

double secret_key_rate_hz(double key_fraction, double eta_t, int n_node, double t_gen_ns) {
  if (!(t_gen_ns > 0.0)) throw std::domain_error("generation time must be > 0");
  if (n_node < 0) throw std::domain_error("n_node must be >= 0");
  // Fixed association: ((f * eta^(n+1)) * 1e9) / t. The optimizer recomputes
  // rates from cached factors and must land on identical bits.
  return key_fraction * pow_int(eta_t, static_cast<std::uint64_t>(n_node) + 1) * 1e9 /
         t_gen_ns;
}

RateResult evaluate(const RepeaterConfig& config) {
  RateResult out;
  out.n_node = config.channel.n_node;

  const double spacing = config.channel.spacing_km();
  out.mu = single_photon_loss(spacing, config.channel.l_att_km, config.efficiencies);
  out.eta_t = transmission_probability(config.tree, out.mu);
  out.t_gen_ns = generation_time_ns(config.tree, config.gates, config.scheme);
  out.emitters = emitter_count(config.tree, config.scheme);

  const ErrorParams errors{config.eps_r, config.channel.n_node};
  out.eps_p = errors.eps_p();
  if (out.eps_p > 1.0) {
    throw InfeasibleError("accumulated error (n_node + 1) * eps_r exceeds 1");
  }
  out.qber = qber_from_error(out.eps_p);
  out.key_fraction = key_fraction(out.qber);
  out.rate_hz = secret_key_rate_hz(out.key_fraction, out.eta_t, config.channel.n_node,
                                   out.t_gen_ns);
  return out;
}

}  // namespace treekey
