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

#include "treekey/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include "treekey/version.hpp"

namespace treekey {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

// Locale-independent double parse over the full token.
double parse_double_token(const std::string& token, const std::string& context) {
  const std::string t = trim(token);
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || t.empty()) {
    throw std::invalid_argument("cannot parse '" + token + "' as a number in " + context);
  }
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

void apply_config_file(const std::string& path, HardwareParams& out) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open config file '" + path + "'");

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;

    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(stripped, "config line " + std::to_string(line_no) +
                                      " is not key=value: '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value_text = trim(stripped.substr(eq + 1));
    double value;
    try {
      value = parse_double_token(value_text, "config key '" + key + "'");
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key, e.what());
    }

    if (key == "t_p_ns") {
      out.gates.t_p_ns = value;
    } else if (key == "t_e_ns") {
      out.gates.t_e_ns = value;
    } else if (key == "t_cz_ns") {
      out.gates.t_cz_ns = value;
    } else if (key == "beta") {
      out.gates.beta = value;
    } else if (key == "eta_c") {
      out.efficiencies.eta_c = value;
    } else if (key == "eta_w") {
      out.efficiencies.eta_w = value;
    } else if (key == "eta_f") {
      out.efficiencies.eta_f = value;
    } else if (key == "eta_d") {
      out.efficiencies.eta_d = value;
    } else if (key == "l_att_km") {
      out.l_att_km = value;
    } else if (key == "eps_r") {
      out.eps_r = value;
    } else if (key == "t2_s") {
      out.t2_s = value;
    } else {
      throw ConfigError(key, "unknown config key '" + key + "' at line " +
                                 std::to_string(line_no));
    }
  }
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

std::vector<double> parse_value_list(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty value list");

  if (t.find(':') != std::string::npos) {
    const auto parts = split(t, ':');
    if (parts.size() != 3) {
      throw std::invalid_argument("range must be start:stop:step, got '" + text + "'");
    }
    const double start = parse_double_token(parts[0], "range start");
    const double stop = parse_double_token(parts[1], "range stop");
    const double step = parse_double_token(parts[2], "range step");
    if (!(step > 0.0)) throw std::invalid_argument("range step must be > 0");
    if (stop < start) throw std::invalid_argument("range stop must be >= start");
    // k-indexed grid start + k * step, endpoint included when it lands on
    // the grid up to 1e-9 relative slack. No accumulation drift.
    const auto count = static_cast<std::size_t>(
        std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> values;
    values.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      values.push_back(start + static_cast<double>(k) * step);
    }
    return values;
  }

  std::vector<double> values;
  for (const std::string& item : split(t, ',')) {
    values.push_back(parse_double_token(item, "value list"));
  }
  return values;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_value_list(text)) {
    const double rounded = std::round(v);
    if (std::abs(v - rounded) > 1e-9 || rounded < -2147483648.0 || rounded > 2147483647.0) {
      throw std::invalid_argument("expected integer values in '" + text + "'");
    }
    out.push_back(static_cast<int>(rounded));
  }
  return out;
}

std::string csv_header() {
  return "distance_km,emitter_budget,eps_r,scheme,m,depth,branching,n_node,"
         "spacing_km,t_gen_ns,mu,eta_t,qber,key_fraction,rate_hz\n";
}

std::string csv_row(double distance_km, int emitter_budget, double eps_r,
                    const std::optional<BestConfig>& best) {
  std::string row = format_double(distance_km);
  row += ',';
  row += std::to_string(emitter_budget);
  row += ',';
  row += format_double(eps_r);
  row += ',';
  if (!best) {
    row += "none,0,0,,0,0,0,0,0,0,0,0\n";
    return row;
  }
  const RepeaterConfig& cfg = best->config;
  const RateResult& res = best->result;
  row += scheme_name(cfg.scheme.kind);
  row += ',';
  row += std::to_string(cfg.scheme.kind == Scheme::multiplexed_rounds ? cfg.scheme.rounds : 1);
  row += ',';
  row += std::to_string(cfg.tree.depth());
  row += ',';
  for (std::size_t i = 0; i < cfg.tree.branching().size(); ++i) {
    if (i > 0) row += '-';
    row += std::to_string(cfg.tree.branching()[i]);
  }
  row += ',';
  row += std::to_string(res.n_node);
  row += ',';
  row += format_double(cfg.channel.spacing_km());
  row += ',';
  row += format_double(res.t_gen_ns);
  row += ',';
  row += format_double(res.mu);
  row += ',';
  row += format_double(res.eta_t);
  row += ',';
  row += format_double(res.qber);
  row += ',';
  row += format_double(res.key_fraction);
  row += ',';
  row += format_double(res.rate_hz);
  row += '\n';
  return row;
}

std::string write_manifest(const std::string& csv_path, const std::string& subcommand,
                           const std::vector<std::pair<std::string, std::string>>& entries) {
  const std::string path = csv_path + ".manifest.txt";
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest '" + path + "'");

  std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &utc);

  out << "subcommand=" << subcommand << '\n';
  out << "version=" << kVersion << '\n';
  out << "timestamp_utc=" << stamp << '\n';
  out << "output=" << csv_path << '\n';
  for (const auto& [key, value] : entries) {
    out << key << '=' << value << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("failed writing manifest '" + path + "'");
  return path;
}

}  // namespace treekey
