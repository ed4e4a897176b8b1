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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treekey/optimizer.hpp"

namespace treekey {

// Everything a config file can set. t2_s is carried along for completeness;
// no formula in this library consumes it.
struct HardwareParams {
  GateTimes gates{};
  EfficiencyParams efficiencies{};
  double l_att_km = 20.0;
  double eps_r = 1e-5;
  double t2_s = 1.0;
};

struct ConfigError : std::runtime_error {
  std::string key;
  ConfigError(std::string bad_key, const std::string& message)
      : std::runtime_error(message), key(std::move(bad_key)) {}
};

// Flat key=value file; '#' starts a comment, blank lines ignored. Recognized
// keys: t_p_ns, t_e_ns, t_cz_ns, beta, eta_c, eta_w, eta_f, eta_d, l_att_km,
// eps_r, t2_s. Unknown keys and unparsable values raise ConfigError naming
// the key. Values already present in `out` act as defaults.
void apply_config_file(const std::string& path, HardwareParams& out);

// Shortest decimal string that round-trips to exactly `v` (std::to_chars).
// Locale-independent, used for every floating-point field that reaches disk,
// so reruns diff cleanly.
std::string format_double(double v);

// "a,b,c" comma list or "start:stop:step" inclusive range (step > 0,
// stop >= start; stop included when it lands within a half step * 1e-9).
// A bare scalar is a one-element list. Throws std::invalid_argument.
std::vector<double> parse_value_list(const std::string& text);

// Same grammar, every value must be integral.
std::vector<int> parse_int_list(const std::string& text);

std::string csv_header();

// One CSV line (newline included). An empty `best` reports scheme "none"
// with zeroed numeric fields: the cell was searched and nothing was
// admissible, which is data, not an error.
std::string csv_row(double distance_km, int emitter_budget, double eps_r,
                    const std::optional<BestConfig>& best);

// Writes `<csv_path>.manifest.txt` with subcommand, tool version, UTC
// timestamp and the resolved key=value entries in the given order. Returns
// the manifest path. Throws std::runtime_error on I/O failure.
std::string write_manifest(const std::string& csv_path, const std::string& subcommand,
                           const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace treekey
