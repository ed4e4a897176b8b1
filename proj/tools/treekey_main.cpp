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

// Command line front end. Exit codes: 0 success, 1 Monte-Carlo validation
// failure, 2 usage or configuration error, 3 infeasible physical request,
// 4 I/O or internal error.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "treekey/io.hpp"
#include "treekey/mc_oracle.hpp"
#include "treekey/optimizer.hpp"
#include "treekey/rate.hpp"
#include "treekey/version.hpp"

namespace {

using namespace treekey;

// Hardware flags shared by every subcommand. Precedence: built-in defaults,
// then --config file, then explicit flags.
struct HardwareFlags {
  HardwareParams flag_values{};
  std::string config_path;
  CLI::Option* t_p = nullptr;
  CLI::Option* t_e = nullptr;
  CLI::Option* t_cz = nullptr;
  CLI::Option* beta = nullptr;
  CLI::Option* eta_c = nullptr;
  CLI::Option* eta_w = nullptr;
  CLI::Option* eta_f = nullptr;
  CLI::Option* eta_d = nullptr;
  CLI::Option* l_att = nullptr;
  CLI::Option* eps_r = nullptr;
  CLI::Option* t2 = nullptr;
};

// `include_eps_r` is off for sweep-distance, which owns --eps-r as a list.
void add_hardware_flags(CLI::App* cmd, HardwareFlags& hf, bool include_eps_r = true) {
  HardwareParams& v = hf.flag_values;
  hf.t_p = cmd->add_option("--t-p-ns", v.gates.t_p_ns, "Photon emission time [ns]")
               ->capture_default_str();
  hf.t_e = cmd->add_option("--t-e-ns", v.gates.t_e_ns, "Emitter measurement time [ns]")
               ->capture_default_str();
  hf.t_cz = cmd->add_option("--t-cz-ns", v.gates.t_cz_ns, "Emitter-emitter CZ time [ns]")
                ->capture_default_str();
  hf.beta = cmd->add_option("--beta", v.gates.beta,
                            "Extra per-photon delay factor of the two-emitter scheme")
                ->capture_default_str();
  hf.eta_c = cmd->add_option("--eta-c", v.efficiencies.eta_c, "Coupling efficiency")
                 ->capture_default_str();
  hf.eta_w = cmd->add_option("--eta-w", v.efficiencies.eta_w, "Wavelength conversion efficiency")
                 ->capture_default_str();
  hf.eta_f = cmd->add_option("--eta-f", v.efficiencies.eta_f, "Frequency shifting efficiency")
                 ->capture_default_str();
  hf.eta_d = cmd->add_option("--eta-d", v.efficiencies.eta_d, "Detector efficiency")
                 ->capture_default_str();
  hf.l_att = cmd->add_option("--l-att-km", v.l_att_km, "Fiber attenuation length [km]")
                 ->capture_default_str();
  if (include_eps_r) {
    hf.eps_r = cmd->add_option("--eps-r", v.eps_r, "Depolarizing error per re-encoding")
                   ->capture_default_str();
  }
  hf.t2 = cmd->add_option("--t2-s", v.t2_s, "Emitter coherence time [s] (recorded only)")
              ->capture_default_str();
  cmd->add_option("--config", hf.config_path, "key=value hardware config file");
}

HardwareParams resolve_hardware(const HardwareFlags& hf) {
  HardwareParams out{};
  if (!hf.config_path.empty()) apply_config_file(hf.config_path, out);
  const HardwareParams& v = hf.flag_values;
  if (hf.t_p->count() > 0) out.gates.t_p_ns = v.gates.t_p_ns;
  if (hf.t_e->count() > 0) out.gates.t_e_ns = v.gates.t_e_ns;
  if (hf.t_cz->count() > 0) out.gates.t_cz_ns = v.gates.t_cz_ns;
  if (hf.beta->count() > 0) out.gates.beta = v.gates.beta;
  if (hf.eta_c->count() > 0) out.efficiencies.eta_c = v.efficiencies.eta_c;
  if (hf.eta_w->count() > 0) out.efficiencies.eta_w = v.efficiencies.eta_w;
  if (hf.eta_f->count() > 0) out.efficiencies.eta_f = v.efficiencies.eta_f;
  if (hf.eta_d->count() > 0) out.efficiencies.eta_d = v.efficiencies.eta_d;
  if (hf.l_att->count() > 0) out.l_att_km = v.l_att_km;
  if (hf.eps_r != nullptr && hf.eps_r->count() > 0) out.eps_r = v.eps_r;
  if (hf.t2->count() > 0) out.t2_s = v.t2_s;
  return out;
}

std::vector<std::pair<std::string, std::string>> hardware_entries(const HardwareParams& h) {
  return {{"t_p_ns", format_double(h.gates.t_p_ns)},
          {"t_e_ns", format_double(h.gates.t_e_ns)},
          {"t_cz_ns", format_double(h.gates.t_cz_ns)},
          {"beta", format_double(h.gates.beta)},
          {"eta_c", format_double(h.efficiencies.eta_c)},
          {"eta_w", format_double(h.efficiencies.eta_w)},
          {"eta_f", format_double(h.efficiencies.eta_f)},
          {"eta_d", format_double(h.efficiencies.eta_d)},
          {"l_att_km", format_double(h.l_att_km)},
          {"eps_r", format_double(h.eps_r)},
          {"t2_s", format_double(h.t2_s)}};
}

// Relative output paths land under $TREEKEY_OUTPUT_DIR when it is set.
std::string resolve_output_path(const std::string& path) {
  const char* dir = std::getenv("TREEKEY_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0' || std::filesystem::path(path).is_absolute()) {
    return path;
  }
  return (std::filesystem::path(dir) / path).string();
}

void write_csv(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << csv_header() << body;
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

Scheme parse_scheme(const std::string& name) {
  if (name == "multiplexed") return Scheme::multiplexed;
  if (name == "multiplexed-rounds") return Scheme::multiplexed_rounds;
  if (name == "single-emitter") return Scheme::single_emitter;
  if (name == "emitter-ancilla") return Scheme::emitter_ancilla;
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

void print_kv(const std::string& key, const std::string& value) {
  std::cout << key << '=' << value << '\n';
}

void print_result(const RepeaterConfig& cfg, const RateResult& res) {
  print_kv("scheme", scheme_name(cfg.scheme.kind));
  print_kv("m", std::to_string(cfg.scheme.kind == Scheme::multiplexed_rounds
                                   ? cfg.scheme.rounds
                                   : 1));
  print_kv("depth", std::to_string(cfg.tree.depth()));
  std::string branching;
  for (std::size_t i = 0; i < cfg.tree.branching().size(); ++i) {
    if (i > 0) branching += '-';
    branching += std::to_string(cfg.tree.branching()[i]);
  }
  print_kv("branching", branching);
  print_kv("n_node", std::to_string(res.n_node));
  print_kv("spacing_km", format_double(cfg.channel.spacing_km()));
  print_kv("emitters", std::to_string(res.emitters));
  print_kv("t_gen_ns", format_double(res.t_gen_ns));
  print_kv("mu", format_double(res.mu));
  print_kv("eta_t", format_double(res.eta_t));
  print_kv("eps_p", format_double(res.eps_p));
  print_kv("qber", format_double(res.qber));
  print_kv("key_fraction", format_double(res.key_fraction));
  print_kv("rate_hz", format_double(res.rate_hz));
}

struct RateArgs {
  std::string tree_text;
  double distance_km = 0.0;
  int n_node = 0;
  std::string scheme = "multiplexed";
  int m = 1;
  std::string csv_path;
};

int run_rate(const RateArgs& args, const HardwareParams& hw) {
  const TreeParams tree(parse_int_list(args.tree_text));
  const SchemeChoice scheme{parse_scheme(args.scheme), args.m};
  const RepeaterConfig cfg{tree,
                           ChannelParams{args.distance_km, args.n_node, hw.l_att_km},
                           hw.efficiencies,
                           hw.gates,
                           scheme,
                           hw.eps_r};
  const RateResult res = evaluate(cfg);
  print_result(cfg, res);

  if (!args.csv_path.empty()) {
    const std::string path = resolve_output_path(args.csv_path);
    // The budget column reports the emitters this configuration uses; no
    // budget was searched here.
    write_csv(path, csv_row(args.distance_km, static_cast<int>(res.emitters),
                            hw.eps_r, BestConfig{cfg, res}));
    auto entries = hardware_entries(hw);
    entries.emplace_back("tree", args.tree_text);
    entries.emplace_back("distance_km", format_double(args.distance_km));
    entries.emplace_back("n_node", std::to_string(args.n_node));
    entries.emplace_back("scheme", args.scheme);
    entries.emplace_back("m", std::to_string(args.m));
    write_manifest(path, "rate", entries);
  }
  return 0;
}

struct OptimizeArgs {
  double distance_km = 0.0;
  int budget = 0;
  double min_spacing_km = 1.0;
  int d_max = 5;
  int n_max = 24;
  int n_node_max = -1;
  int threads = 1;
  bool no_prune = false;
  std::string csv_path;
};

OptimizationProblem make_problem(const OptimizeArgs& args, const HardwareParams& hw) {
  OptimizationProblem p;
  p.total_distance_km = args.distance_km;
  p.emitter_budget = args.budget;
  p.eps_r = hw.eps_r;
  p.min_spacing_km = args.min_spacing_km;
  p.d_max = args.d_max;
  p.n_max = args.n_max;
  p.n_node_max = args.n_node_max;
  p.efficiencies = hw.efficiencies;
  p.gates = hw.gates;
  p.l_att_km = hw.l_att_km;
  p.threads = args.threads;
  p.enable_pruning = !args.no_prune;
  return p;
}

std::vector<std::pair<std::string, std::string>> problem_entries(
    const OptimizeArgs& args, const HardwareParams& hw) {
  auto entries = hardware_entries(hw);
  entries.emplace_back("min_spacing_km", format_double(args.min_spacing_km));
  entries.emplace_back("d_max", std::to_string(args.d_max));
  entries.emplace_back("n_max", std::to_string(args.n_max));
  entries.emplace_back("n_node_max", std::to_string(args.n_node_max));
  entries.emplace_back("threads", std::to_string(args.threads));
  entries.emplace_back("pruning", args.no_prune ? "off" : "on");
  return entries;
}

int run_optimize(const OptimizeArgs& args, const HardwareParams& hw) {
  const OptimizationOutcome out = optimize(make_problem(args, hw));
  print_kv("evaluated", std::to_string(out.evaluated));
  if (out.best) {
    print_result(out.best->config, out.best->result);
  } else {
    print_kv("scheme", "none");
    print_kv("rate_hz", "0");
  }

  if (!args.csv_path.empty()) {
    const std::string path = resolve_output_path(args.csv_path);
    write_csv(path, csv_row(args.distance_km, args.budget, hw.eps_r, out.best));
    auto entries = problem_entries(args, hw);
    entries.emplace_back("distance_km", format_double(args.distance_km));
    entries.emplace_back("emitter_budget", std::to_string(args.budget));
    write_manifest(path, "optimize", entries);
  }
  return 0;
}

int run_sweep_emitters(const OptimizeArgs& args, const HardwareParams& hw,
                       const std::string& budgets_text, const std::string& out_path) {
  const std::vector<int> budgets = parse_int_list(budgets_text);
  OptimizeArgs base = args;
  base.budget = budgets.empty() ? 0 : budgets.front();
  const auto rows = sweep_emitters(make_problem(base, hw), budgets);

  std::string body;
  for (const auto& row : rows) {
    body += csv_row(args.distance_km, row.emitter_budget, hw.eps_r, row.outcome.best);
  }
  const std::string path = resolve_output_path(out_path);
  write_csv(path, body);
  auto entries = problem_entries(args, hw);
  entries.emplace_back("distance_km", format_double(args.distance_km));
  entries.emplace_back("budgets", budgets_text);
  write_manifest(path, "sweep-emitters", entries);
  std::cout << "wrote " << rows.size() << " rows to " << path << '\n';
  return 0;
}

int run_sweep_distance(const OptimizeArgs& args, const HardwareParams& hw,
                       const std::string& distances_text, const std::string& eps_text,
                       const std::vector<std::string>& gate_set_texts,
                       const std::string& out_path) {
  const std::vector<double> distances = parse_value_list(distances_text);
  const std::vector<double> eps_values = parse_value_list(eps_text);

  std::vector<GateTimes> gate_sets;
  if (gate_set_texts.empty()) {
    gate_sets.push_back(hw.gates);
  } else {
    for (const std::string& text : gate_set_texts) {
      const auto pair = parse_value_list(text);
      if (pair.size() != 2) {
        throw std::invalid_argument("--gate-set expects 't_e_ns,t_cz_ns', got '" + text + "'");
      }
      GateTimes g = hw.gates;
      g.t_e_ns = pair[0];
      g.t_cz_ns = pair[1];
      gate_sets.push_back(g);
    }
  }

  const auto rows = sweep_distance(make_problem(args, hw), distances, eps_values, gate_sets);
  std::string body;
  for (const auto& row : rows) {
    body += csv_row(row.distance_km, args.budget, row.eps_r, row.outcome.best);
  }
  const std::string path = resolve_output_path(out_path);
  write_csv(path, body);

  auto entries = problem_entries(args, hw);
  entries.emplace_back("emitter_budget", std::to_string(args.budget));
  entries.emplace_back("distances_km", distances_text);
  entries.emplace_back("eps_r_list", eps_text);
  std::string sets;
  for (std::size_t i = 0; i < gate_sets.size(); ++i) {
    if (i > 0) sets += ';';
    sets += format_double(gate_sets[i].t_e_ns) + ',' + format_double(gate_sets[i].t_cz_ns);
  }
  entries.emplace_back("gate_sets", sets);
  write_manifest(path, "sweep-distance", entries);
  std::cout << "wrote " << rows.size() << " rows to " << path << '\n';
  return 0;
}

struct ValidateArgs {
  std::vector<std::string> tree_texts;
  std::string mu_text = "0.05,0.1,0.3,0.5";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  int threads = 1;
  std::uint64_t max_photons = 10000;
  double inject_bias = 0.0;
};

int run_validate_mc(const ValidateArgs& args) {
  std::vector<std::vector<int>> trees;
  if (args.tree_texts.empty()) {
    // Default grid: depths 2 and 3, each branching parameter in {2, 3, 4}.
    for (int a = 2; a <= 4; ++a) {
      for (int b = 2; b <= 4; ++b) {
        trees.push_back({a, b});
      }
    }
    for (int a = 2; a <= 4; ++a) {
      for (int b = 2; b <= 4; ++b) {
        for (int c = 2; c <= 4; ++c) {
          trees.push_back({a, b, c});
        }
      }
    }
  } else {
    for (const std::string& text : args.tree_texts) {
      trees.push_back(parse_int_list(text));
    }
  }
  const std::vector<double> mus = parse_value_list(args.mu_text);

  McConfig mc;
  mc.samples = args.samples;
  mc.seed = args.seed;
  mc.workers = args.threads;

  int failures = 0;
  for (const auto& branching : trees) {
    const TreeParams tree(branching);
    if (tree.total_photons() > args.max_photons) {
      throw std::invalid_argument("tree exceeds --max-photons; raise the guard to proceed");
    }
    std::string name;
    for (std::size_t i = 0; i < branching.size(); ++i) {
      if (i > 0) name += '-';
      name += std::to_string(branching[i]);
    }
    for (double mu : mus) {
      const double analytic = transmission_probability(tree, mu) + args.inject_bias;
      const McEstimate est = mc_transmission(tree, mu, mc);
      const double gap = std::abs(est.estimate - analytic);
      const bool ok = est.std_error == 0.0 ? gap == 0.0 : gap <= 4.0 * est.std_error;
      if (!ok) ++failures;
      std::cout << "tree=" << name << " mu=" << format_double(mu)
                << " analytic=" << format_double(analytic)
                << " mc=" << format_double(est.estimate)
                << " std_error=" << format_double(est.std_error)
                << (ok ? " PASS" : " FAIL") << '\n';
    }
  }
  std::cout << (failures == 0 ? "all comparisons within 4 standard errors"
                              : "validation failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"Secret-key rates of one-way quantum repeaters built on photonic tree states"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CLI::App* rate_cmd = app.add_subcommand("rate", "Evaluate one repeater configuration");
  HardwareFlags rate_hw;
  RateArgs rate_args;
  add_hardware_flags(rate_cmd, rate_hw);
  rate_cmd->add_option("--tree", rate_args.tree_text, "Branching vector, e.g. 4,4,4")->required();
  rate_cmd->add_option("--distance-km,--distance", rate_args.distance_km, "End-to-end distance [km]")
      ->required();
  rate_cmd->add_option("--n-node", rate_args.n_node, "Number of intermediate stations")
      ->required();
  rate_cmd->add_option("--scheme", rate_args.scheme,
                       "multiplexed | multiplexed-rounds | single-emitter | emitter-ancilla")
      ->capture_default_str();
  rate_cmd->add_option("--m", rate_args.m, "Photon rounds (multiplexed-rounds only)")
      ->capture_default_str();
  rate_cmd->add_option("--csv", rate_args.csv_path, "Also write a one-row CSV here");

  CLI::App* opt_cmd = app.add_subcommand("optimize", "Search trees, schemes and station counts");
  HardwareFlags opt_hw;
  OptimizeArgs opt_args;
  add_hardware_flags(opt_cmd, opt_hw);
  opt_cmd->add_option("--distance-km,--distance", opt_args.distance_km, "End-to-end distance [km]")
      ->required();
  opt_cmd->add_option("--budget", opt_args.budget, "Emitter budget")->required();
  opt_cmd->add_option("--min-spacing-km", opt_args.min_spacing_km, "Smallest station spacing")
      ->capture_default_str();
  opt_cmd->add_option("--d-max", opt_args.d_max, "Largest tree depth")->capture_default_str();
  opt_cmd->add_option("--n-max", opt_args.n_max, "Largest branching parameter")
      ->capture_default_str();
  opt_cmd->add_option("--n-node-max", opt_args.n_node_max,
                      "Largest station count (-1 derives it from the spacing)")
      ->capture_default_str();
  opt_cmd->add_option("--threads", opt_args.threads, "Worker threads")->capture_default_str();
  opt_cmd->add_flag("--no-prune", opt_args.no_prune, "Disable search prunes (same result)");
  opt_cmd->add_option("--csv", opt_args.csv_path, "Write the best row as CSV here");

  CLI::App* se_cmd = app.add_subcommand("sweep-emitters", "Optimize over a list of budgets");
  HardwareFlags se_hw;
  OptimizeArgs se_args;
  std::string se_budgets;
  std::string se_out;
  add_hardware_flags(se_cmd, se_hw);
  se_cmd->add_option("--distance-km,--distance", se_args.distance_km, "End-to-end distance [km]")
      ->required();
  se_cmd->add_option("--budgets", se_budgets, "Budget list, e.g. 10:200:10")->required();
  se_cmd->add_option("--min-spacing-km", se_args.min_spacing_km, "Smallest station spacing")
      ->capture_default_str();
  se_cmd->add_option("--d-max", se_args.d_max, "Largest tree depth")->capture_default_str();
  se_cmd->add_option("--n-max", se_args.n_max, "Largest branching parameter")
      ->capture_default_str();
  se_cmd->add_option("--n-node-max", se_args.n_node_max,
                     "Largest station count (-1 derives it from the spacing)")
      ->capture_default_str();
  se_cmd->add_option("--threads", se_args.threads, "Worker threads")->capture_default_str();
  se_cmd->add_flag("--no-prune", se_args.no_prune, "Disable search prunes (same result)");
  se_cmd->add_option("--out", se_out, "Output CSV path")->required();

  CLI::App* sd_cmd = app.add_subcommand("sweep-distance",
                                        "Optimize over distances, error rates and gate sets");
  HardwareFlags sd_hw;
  OptimizeArgs sd_args;
  std::string sd_distances;
  std::string sd_eps = "1e-5";
  std::vector<std::string> sd_gate_sets;
  std::string sd_out;
  add_hardware_flags(sd_cmd, sd_hw, /*include_eps_r=*/false);
  sd_cmd->add_option("--distances-km,--distances", sd_distances, "Distance list, e.g. 100,500,1000")
      ->required();
  sd_cmd->add_option("--eps-r-list,--eps-r", sd_eps, "Re-encoding error list")->capture_default_str();
  sd_cmd->add_option("--budget", sd_args.budget, "Emitter budget")->required();
  sd_cmd->add_option("--gate-set", sd_gate_sets,
                     "t_e_ns,t_cz_ns pair; repeat the flag for several sets");
  sd_cmd->add_option("--min-spacing-km", sd_args.min_spacing_km, "Smallest station spacing")
      ->capture_default_str();
  sd_cmd->add_option("--d-max", sd_args.d_max, "Largest tree depth")->capture_default_str();
  sd_cmd->add_option("--n-max", sd_args.n_max, "Largest branching parameter")
      ->capture_default_str();
  sd_cmd->add_option("--n-node-max", sd_args.n_node_max,
                     "Largest station count (-1 derives it from the spacing)")
      ->capture_default_str();
  sd_cmd->add_option("--threads", sd_args.threads, "Worker threads")->capture_default_str();
  sd_cmd->add_flag("--no-prune", sd_args.no_prune, "Disable search prunes (same result)");
  sd_cmd->add_option("--out", sd_out, "Output CSV path")->required();

  CLI::App* mc_cmd = app.add_subcommand("validate-mc",
                                        "Compare the loss recursion against Monte-Carlo");
  ValidateArgs mc_args;
  mc_cmd->add_option("--tree", mc_args.tree_texts,
                     "Branching vector; repeat for several trees (default: small-tree grid)");
  mc_cmd->add_option("--mu-list", mc_args.mu_text, "Photon loss probabilities")
      ->capture_default_str();
  mc_cmd->add_option("--samples", mc_args.samples, "Samples per comparison")
      ->capture_default_str();
  mc_cmd->add_option("--seed", mc_args.seed, "Base RNG seed")->capture_default_str();
  mc_cmd->add_option("--threads", mc_args.threads, "Worker threads")->capture_default_str();
  mc_cmd->add_option("--max-photons", mc_args.max_photons,
                     "Refuse trees with more photons than this")
      ->capture_default_str();
  mc_cmd->add_option("--inject-analytic-bias", mc_args.inject_bias, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rate_cmd->parsed()) return run_rate(rate_args, resolve_hardware(rate_hw));
    if (opt_cmd->parsed()) return run_optimize(opt_args, resolve_hardware(opt_hw));
    if (se_cmd->parsed()) {
      return run_sweep_emitters(se_args, resolve_hardware(se_hw), se_budgets, se_out);
    }
    if (sd_cmd->parsed()) {
      return run_sweep_distance(sd_args, resolve_hardware(sd_hw), sd_distances, sd_eps,
                                sd_gate_sets, sd_out);
    }
    if (mc_cmd->parsed()) return run_validate_mc(mc_args);
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "config error (key '" << e.key << "'): " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
