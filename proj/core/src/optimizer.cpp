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

#include "treekey/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "treekey/math.hpp"

namespace treekey {

namespace {

// Packed branching vector; keeps the feasible-tree list compact enough to
// materialize for static thread partitioning.
constexpr int kMaxDepth = 6;

struct PackedTree {
  std::uint8_t depth = 0;
  std::array<std::uint16_t, kMaxDepth> n{};
};

std::vector<int> unpack(const PackedTree& t) {
  std::vector<int> b(t.depth);
  for (int i = 0; i < t.depth; ++i) b[static_cast<std::size_t>(i)] = t.n[static_cast<std::size_t>(i)];
  return b;
}

struct Candidate {
  double rate = -1.0;
  PackedTree tree{};
  int n_node = -1;
  Scheme kind = Scheme::multiplexed;
  int m = 1;
  std::uint64_t emitters = 0;
  std::uint64_t photons = 0;

  bool valid() const { return n_node >= 0; }
};

int scheme_rank(Scheme kind) { return kind == Scheme::multiplexed ? 0 : 1; }

bool branching_less(const PackedTree& a, const PackedTree& b) {
  return std::lexicographical_compare(a.n.begin(), a.n.begin() + a.depth,
                                      b.n.begin(), b.n.begin() + b.depth);
}

bool branching_equal(const PackedTree& a, const PackedTree& b) {
  return a.depth == b.depth &&
         std::equal(a.n.begin(), a.n.begin() + a.depth, b.n.begin());
}

// The documented total order: highest rate, then the tie-break chain.
bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid()) return a.valid();
  if (!a.valid()) return false;
  if (a.rate != b.rate) return a.rate > b.rate;
  if (a.emitters != b.emitters) return a.emitters < b.emitters;
  if (a.photons != b.photons) return a.photons < b.photons;
  if (!branching_equal(a.tree, b.tree)) return branching_less(a.tree, b.tree);
  if (a.n_node != b.n_node) return a.n_node < b.n_node;
  if (scheme_rank(a.kind) != scheme_rank(b.kind)) {
    return scheme_rank(a.kind) < scheme_rank(b.kind);
  }
  return a.m < b.m;
}

// Cheapest emitter assignment any scheme can reach is 2 per multiplexing
// unit (m = n_{d-2} rounds when n_{d-2} >= 2, plain multiplexed otherwise),
// so a tree is worth enumerating iff 2 * prod_{i<=d-3} n_i fits the budget.
void enumerate_depth(int d, int n_max, int emitter_budget, int digit,
                     std::uint64_t units, PackedTree& cur,
                     std::vector<PackedTree>& out) {
  if (digit == d) {
    out.push_back(cur);
    return;
  }
  for (int v = 1; v <= n_max; ++v) {
    std::uint64_t next_units = units;
    if (digit <= d - 3) {
      next_units = units * static_cast<std::uint64_t>(v);
      // Monotone in every digit: once the floor exceeds the budget, larger
      // values of this digit only make it worse.
      if (2 * next_units > static_cast<std::uint64_t>(emitter_budget)) break;
    }
    cur.n[static_cast<std::size_t>(digit)] = static_cast<std::uint16_t>(v);
    enumerate_depth(d, n_max, emitter_budget, digit + 1, next_units, cur, out);
  }
}

std::vector<PackedTree> enumerate_feasible_trees(const OptimizationProblem& p) {
  std::vector<PackedTree> out;
  if (p.emitter_budget < 2) return out;
  for (int d = 2; d <= p.d_max; ++d) {
    PackedTree cur;
    cur.depth = static_cast<std::uint8_t>(d);
    enumerate_depth(d, p.n_max, p.emitter_budget, 0, 1, cur, out);
  }
  return out;
}

struct SchemeInfo {
  SchemeChoice choice;
  std::uint64_t emitters = 0;
  double t_ns = 0.0;
};

// Upper bounds are inflated by this factor before comparing against the
// incumbent. The bounds are exact in real arithmetic; the margin absorbs the
// few-ulp slack floating point can introduce, so a prune can only ever drop
// configurations strictly worse than the incumbent.
constexpr double kBoundMargin = 1.0 + 1e-9;

struct SearchContext {
  const OptimizationProblem* problem = nullptr;
  std::vector<PackedTree> trees;
  std::vector<double> mu;  // per n_node
  std::vector<double> f;   // per n_node
  double f_max = 0.0;
  double mu_min = 1.0;
  int n_hi = -1;  // largest admissible n_node, -1 when none
};

// Admissibility of a station count is decided by the same expressions the
// evaluation path uses, so the search and a naive enumeration agree on the
// domain bit for bit.
bool spacing_admissible(const OptimizationProblem& p, int n_node) {
  const double spacing =
      ChannelParams{p.total_distance_km, n_node, p.l_att_km}.spacing_km();
  return spacing >= p.min_spacing_km;
}

SearchContext build_context(const OptimizationProblem& p) {
  if (p.d_max < 2 || p.d_max > kMaxDepth) {
    throw std::invalid_argument("d_max must lie in [2, 6]");
  }
  if (p.n_max < 1 || p.n_max > 65535) {
    throw std::invalid_argument("n_max must lie in [1, 65535]");
  }
  if (!(p.total_distance_km >= 0.0)) {
    throw std::invalid_argument("total_distance_km must be >= 0");
  }
  if (!(p.eps_r >= 0.0)) throw std::invalid_argument("eps_r must be >= 0");
  if (p.threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (p.n_node_max < 0 && !(p.min_spacing_km > 0.0)) {
    throw std::invalid_argument(
        "n_node_max must be set when min_spacing_km does not bound the search");
  }

  SearchContext ctx;
  ctx.problem = &p;

  int n_hi;
  if (p.n_node_max >= 0) {
    n_hi = p.n_node_max;
  } else {
    // Start from the rounded estimate and settle on the exact FP predicate.
    const double approx = std::floor(p.total_distance_km / p.min_spacing_km);
    n_hi = approx > 2e9 ? 2000000000 : static_cast<int>(approx) + 1;
  }
  while (n_hi >= 0 && (!spacing_admissible(p, n_hi) ||
                       ErrorParams{p.eps_r, n_hi}.eps_p() > 1.0)) {
    --n_hi;
  }
  ctx.n_hi = n_hi;
  if (n_hi < 0) return ctx;

  ctx.mu.resize(static_cast<std::size_t>(n_hi) + 1);
  ctx.f.resize(static_cast<std::size_t>(n_hi) + 1);
  for (int n = 0; n <= n_hi; ++n) {
    const ChannelParams channel{p.total_distance_km, n, p.l_att_km};
    ctx.mu[static_cast<std::size_t>(n)] =
        single_photon_loss(channel.spacing_km(), p.l_att_km, p.efficiencies);
    ctx.f[static_cast<std::size_t>(n)] =
        key_fraction(qber_from_error(ErrorParams{p.eps_r, n}.eps_p()));
  }
  ctx.f_max = *std::max_element(ctx.f.begin(), ctx.f.end());
  ctx.mu_min = *std::min_element(ctx.mu.begin(), ctx.mu.end());
  ctx.trees = enumerate_feasible_trees(p);
  return ctx;
}

struct WorkerResult {
  Candidate best;
  std::uint64_t evaluated = 0;
};

// Scans trees[lo, hi). The prunes are rate upper bounds, each valid for
// everything they skip, and they fire only strictly below the incumbent, so
// the surviving argmax (with the total tie-break order) matches a full scan.
//
// Why the bounds hold: f[n] <= f_max by table max; pow_int(eta, n+1) <= eta
// for eta in [0, 1] (a product of factors in [0, 1], monotone rounding);
// and eta_t is non-increasing in mu. For the last fact, note eta_t =
// P(decoding succeeds) * (1 - mu + mu R_2)^{n_1}: the first factor is the
// probability of a monotone event in the per-photon presence bits (losing
// a photon can only break "present or indirectly recoverable" conjunctions),
// so thinning presence by raising mu lowers it; the second factor falls in
// mu because R_2 does. mu is smallest at the largest admissible n_node.
WorkerResult scan_range(const SearchContext& ctx, std::size_t lo, std::size_t hi) {
  const OptimizationProblem& p = *ctx.problem;
  WorkerResult wr;
  std::vector<SchemeInfo> schemes;

  for (std::size_t ti = lo; ti < hi; ++ti) {
    const PackedTree& packed = ctx.trees[ti];
    const TreeParams tree(unpack(packed));
    const int d = tree.depth();
    const int nd2 = tree.branch(d - 2);

    schemes.clear();
    const SchemeChoice mux{Scheme::multiplexed, 1};
    const std::uint64_t mux_emitters = emitter_count(tree, mux);
    if (mux_emitters <= static_cast<std::uint64_t>(p.emitter_budget)) {
      schemes.push_back({mux, mux_emitters, generation_time_ns(tree, p.gates, mux)});
    }
    for (int m = 2; m <= nd2; ++m) {
      if (nd2 % m != 0) continue;
      const SchemeChoice rounds{Scheme::multiplexed_rounds, m};
      const std::uint64_t em = emitter_count(tree, rounds);
      if (em <= static_cast<std::uint64_t>(p.emitter_budget)) {
        schemes.push_back({rounds, em, generation_time_ns(tree, p.gates, rounds)});
      }
    }
    if (schemes.empty()) continue;

    double t_min = schemes.front().t_ns;
    for (const SchemeInfo& s : schemes) {
      if (!(s.t_ns > 0.0)) {
        throw std::domain_error("gate times give a non-positive generation time");
      }
      t_min = std::min(t_min, s.t_ns);
    }

    if (p.enable_pruning && wr.best.valid()) {
      // Time-only bound first (no recursion), then sharpen with the
      // transmission at the smallest admissible mu.
      const double ub0 = ctx.f_max * 1e9 / t_min * kBoundMargin;
      if (ub0 < wr.best.rate) continue;
      const double eta_ub = transmission_probability(tree, ctx.mu_min);
      const double ub1 = ctx.f_max * eta_ub * 1e9 / t_min * kBoundMargin;
      if (ub1 < wr.best.rate) continue;
    }

    // Per-scheme running argmax over n_node. Descending scan with >= so the
    // smallest n wins rate ties, mirroring the documented tie-break.
    struct PerScheme {
      double rate = -1.0;
      int n_node = -1;
    };
    std::vector<PerScheme> sbest(schemes.size());

    for (int n = ctx.n_hi; n >= 0; --n) {
      const double fn = ctx.f[static_cast<std::size_t>(n)];
      if (fn == 0.0) {
        // Zero key fraction forces rate exactly 0.0 for every scheme; no
        // need to run the recursion to know it.
        for (std::size_t si = 0; si < schemes.size(); ++si) {
          if (0.0 >= sbest[si].rate) sbest[si] = {0.0, n};
        }
        wr.evaluated += schemes.size();
        continue;
      }
      const double eta = transmission_probability(tree, ctx.mu[static_cast<std::size_t>(n)]);
      const double g = fn * pow_int(eta, static_cast<std::uint64_t>(n) + 1);
      for (std::size_t si = 0; si < schemes.size(); ++si) {
        const double rate = g * 1e9 / schemes[si].t_ns;
        if (rate >= sbest[si].rate) sbest[si] = {rate, n};
      }
      wr.evaluated += schemes.size();

      if (p.enable_pruning && wr.best.valid()) {
        // Every remaining n has larger mu, hence smaller eta; if even one
        // hop at the current eta cannot beat the incumbent, stop.
        const double rem_ub = ctx.f_max * eta * 1e9 / t_min * kBoundMargin;
        if (rem_ub < wr.best.rate) break;
      }
    }

    for (std::size_t si = 0; si < schemes.size(); ++si) {
      if (sbest[si].n_node < 0) continue;
      Candidate cand;
      cand.rate = sbest[si].rate;
      cand.tree = packed;
      cand.n_node = sbest[si].n_node;
      cand.kind = schemes[si].choice.kind;
      cand.m = schemes[si].choice.rounds;
      cand.emitters = schemes[si].emitters;
      cand.photons = tree.total_photons();
      if (better(cand, wr.best)) wr.best = cand;
    }
  }
  return wr;
}

}  // namespace

OptimizationOutcome optimize(const OptimizationProblem& problem) {
  const SearchContext ctx = build_context(problem);
  OptimizationOutcome outcome;
  if (ctx.n_hi < 0 || ctx.trees.empty()) return outcome;

  const std::size_t n_trees = ctx.trees.size();
  const int workers = static_cast<int>(std::min<std::size_t>(
      static_cast<std::size_t>(problem.threads), n_trees));

  Candidate best;
  if (workers <= 1) {
    WorkerResult wr = scan_range(ctx, 0, n_trees);
    best = wr.best;
    outcome.evaluated = wr.evaluated;
  } else {
    std::vector<WorkerResult> results(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      const std::size_t lo = n_trees * static_cast<std::size_t>(w) / static_cast<std::size_t>(workers);
      const std::size_t hi = n_trees * (static_cast<std::size_t>(w) + 1) / static_cast<std::size_t>(workers);
      pool.emplace_back([&ctx, &results, w, lo, hi] {
        results[static_cast<std::size_t>(w)] = scan_range(ctx, lo, hi);
      });
    }
    for (auto& t : pool) t.join();
    for (const WorkerResult& wr : results) {
      outcome.evaluated += wr.evaluated;
      if (better(wr.best, best)) best = wr.best;
    }
  }

  if (!best.valid()) return outcome;

  RepeaterConfig config{
      TreeParams(unpack(best.tree)),
      ChannelParams{problem.total_distance_km, best.n_node, problem.l_att_km},
      problem.efficiencies,
      problem.gates,
      SchemeChoice{best.kind, best.m},
      problem.eps_r,
  };
  RateResult result = evaluate(config);
  // The scan computes rates from cached factors; they must agree with the
  // reference pipeline to the bit or the factorization is broken.
  if (result.rate_hz != best.rate) {
    throw std::logic_error("optimizer fast path diverged from evaluate()");
  }
  outcome.best = BestConfig{std::move(config), result};
  return outcome;
}

std::vector<BudgetSweepRow> sweep_emitters(const OptimizationProblem& base,
                                           const std::vector<int>& budgets) {
  std::vector<BudgetSweepRow> rows;
  rows.reserve(budgets.size());
  for (int budget : budgets) {
    OptimizationProblem p = base;
    p.emitter_budget = budget;
    rows.push_back({budget, optimize(p)});
  }
  return rows;
}

std::vector<DistanceSweepRow> sweep_distance(const OptimizationProblem& base,
                                             const std::vector<double>& distances_km,
                                             const std::vector<double>& eps_r_values,
                                             const std::vector<GateTimes>& gate_sets) {
  std::vector<DistanceSweepRow> rows;
  rows.reserve(distances_km.size() * eps_r_values.size() * gate_sets.size());
  for (const GateTimes& gates : gate_sets) {
    for (double eps_r : eps_r_values) {
      for (double distance : distances_km) {
        OptimizationProblem p = base;
        p.gates = gates;
        p.eps_r = eps_r;
        p.total_distance_km = distance;
        rows.push_back({distance, eps_r, gates, optimize(p)});
      }
    }
  }
  return rows;
}

}  // namespace treekey
