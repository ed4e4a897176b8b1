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

#include "treekey/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace treekey {

namespace {

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

double ChannelParams::spacing_km() const {
  if (n_node < 0) throw std::domain_error("n_node must be >= 0");
  if (!(total_distance_km >= 0.0)) throw std::domain_error("total_distance_km must be >= 0");
  return total_distance_km / static_cast<double>(n_node + 1);
}

double hop_transmission(double distance_km, double l_att_km) {
  if (!(distance_km >= 0.0)) throw std::domain_error("distance_km must be >= 0");
  if (!(l_att_km > 0.0)) throw std::domain_error("l_att_km must be > 0");
  return std::exp(-distance_km / l_att_km);
}

double system_efficiency(const EfficiencyParams& p) {
  check_unit_interval(p.eta_c, "eta_c");
  check_unit_interval(p.eta_w, "eta_w");
  check_unit_interval(p.eta_f, "eta_f");
  check_unit_interval(p.eta_d, "eta_d");
  return p.eta_c * p.eta_w * p.eta_f * p.eta_d;
}

double single_photon_loss(double spacing_km, double l_att_km, const EfficiencyParams& p) {
  // Both factors are in [0, 1], so the result is too; no clamping needed.
  return 1.0 - hop_transmission(spacing_km, l_att_km) * system_efficiency(p);
}

}  // namespace treekey
