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

namespace treekey {

// Non-fiber efficiencies a photon sees once per hop. Defaults are the
// baseline hardware values used throughout.
struct EfficiencyParams {
  double eta_c = 1.0;   // emitter-fiber coupling
  double eta_w = 0.99;  // wavelength conversion
  double eta_f = 0.99;  // frequency shifting
  double eta_d = 0.98;  // detection
};

// Repeater chain geometry: n_node stations strictly between the endpoints,
// equally spaced over the total distance.
struct ChannelParams {
  double total_distance_km = 0.0;
  int n_node = 0;
  double l_att_km = 20.0;

  // Per-hop fiber length L0 = total / (n_node + 1).
  double spacing_km() const;
};

// exp(-distance / l_att). Requires distance >= 0, l_att > 0.
double hop_transmission(double distance_km, double l_att_km);

// Product eta_c * eta_w * eta_f * eta_d. Each factor must lie in [0, 1].
double system_efficiency(const EfficiencyParams& p);

// Effective single-photon loss over one hop,
//   mu = 1 - hop_transmission(spacing) * system_efficiency(p),
// always in [0, 1].
double single_photon_loss(double spacing_km, double l_att_km, const EfficiencyParams& p);

}  // namespace treekey
