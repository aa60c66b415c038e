/*
Copyright 2026 The pebblemp Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "pebble/errors.hpp"
#include "pebble/strategies.hpp"

namespace pebble {

namespace {

constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::max();

struct GreedyRun {
  const ProblemInstance &inst;
  const CompDag &dag;
  const GreedyPolicy &policy;
  StrategyBuilder &b;
  std::vector<bool> computed;
  std::vector<std::size_t> open_succ;  // uncomputed out-neighbors
  std::vector<std::vector<std::int64_t>> last_use;
  std::vector<std::size_t> priority;
  std::int64_t clock = 0;

  GreedyRun(const ProblemInstance &i, const CompDag &d, const GreedyPolicy &p, StrategyBuilder &builder)
      : inst(i), dag(d), policy(p), b(builder), computed(d.n(), false), open_succ(d.n()),
        last_use(static_cast<std::size_t>(i.k), std::vector<std::int64_t>(d.n(), -1)), priority(d.n()) {
    for (NodeId v = 0; v < dag.n(); ++v) open_succ[v] = dag.out_degree(v);
    std::iota(priority.begin(), priority.end(), 0);
    if (policy.tie_seed != 0) {
      std::vector<std::size_t> perm(dag.n());
      std::iota(perm.begin(), perm.end(), 0);
      std::mt19937_64 rng(policy.tie_seed);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t i2 = 0; i2 < perm.size(); ++i2) priority[perm[i2]] = i2;
    }
  }

  bool ready(NodeId v) const {
    if (computed[v]) return false;
    for (NodeId u : dag.preds(v))
      if (!computed[u]) return false;
    return true;
  }

  // Returns true when (cnt_a / deg_a) beats (cnt_b / deg_b) under the policy.
  bool better(NodeId a, NodeId b2, int shade) const {
    auto score = [&](NodeId v) -> std::pair<std::int64_t, std::int64_t> {
      std::int64_t cnt = 0;
      for (NodeId u : dag.preds(v))
        if (b.red(shade, u)) ++cnt;
      if (policy.score == GreedyScore::CountRedInNeighbors) return {cnt, 1};
      std::int64_t deg = static_cast<std::int64_t>(dag.in_degree(v));
      if (deg == 0) return {policy.source_fraction == SourceFraction::One ? 1 : 0, 1};
      return {cnt, deg};
    };
    auto [na, da] = score(a);
    auto [nb, db] = score(b2);
    if (na * db != nb * da) return na * db > nb * da;
    return priority[a] < priority[b2];
  }

  std::int64_t next_use(NodeId v) const {
    std::int64_t best = kNever;
    for (NodeId w : dag.succs(v))
      if (!computed[w]) best = std::min<std::int64_t>(best, static_cast<std::int64_t>(dag.topo_position()[w]));
    return best;
  }

  void run() {
    const int k = inst.k;
    std::size_t done = 0;
    while (done < dag.n()) {
      std::vector<NodeId> ready_nodes;
      for (NodeId v = 0; v < dag.n(); ++v)
        if (ready(v)) ready_nodes.push_back(v);

      std::vector<std::optional<NodeId>> goal(static_cast<std::size_t>(k));
      std::set<NodeId> taken;
      for (int p = 1; p <= k; ++p) {
        std::optional<NodeId> best;
        for (NodeId v : ready_nodes) {
          if (taken.count(v)) continue;
          if (!best || better(v, *best, p)) best = v;
        }
        if (best) {
          goal[p - 1] = best;
          taken.insert(*best);
        }
      }

      std::set<NodeId> will_be_blue;
      for (NodeId v = 0; v < dag.n(); ++v)
        if (b.blue(v)) will_be_blue.insert(v);
      std::vector<Placement> saves, loads;
      std::vector<Removal> evictions;
      std::vector<std::set<NodeId>> evicted(static_cast<std::size_t>(k));

      auto schedule_save = [&](int shade, NodeId v) {
        if (will_be_blue.insert(v).second) saves.push_back({shade, v});
      };
      auto other_copy = [&](int shade, NodeId v) {
        for (int q = 1; q <= k; ++q)
          if (q != shade && b.red(q, v) && !evicted[q - 1].count(v)) return true;
        return false;
      };

      // cross-processor inputs travel through slow memory
      for (int p = 1; p <= k; ++p) {
        if (!goal[p - 1]) continue;
        for (NodeId u : dag.preds(*goal[p - 1])) {
          if (b.red(p, u) || will_be_blue.count(u)) continue;
          int h = b.holder(u);
          if (h == 0) throw InvalidStrategyError("greedy lost the value of node " + std::to_string(u));
          schedule_save(h, u);
        }
      }

      for (int p = 1; p <= k; ++p) {
        if (!goal[p - 1]) continue;
        NodeId v = *goal[p - 1];
        std::vector<NodeId> missing;
        for (NodeId u : dag.preds(v))
          if (!b.red(p, u)) missing.push_back(u);
        std::vector<NodeId> held = b.red_nodes(p);
        std::int64_t excess = static_cast<std::int64_t>(held.size() + missing.size() + 1) - inst.r;
        if (excess <= 0) {
          for (NodeId u : missing) loads.push_back({p, u});
          continue;
        }
        struct Cand {
          NodeId v;
          std::int64_t key;
        };
        std::vector<Cand> cands;
        for (NodeId x : held) {
          if (std::find(dag.preds(v).begin(), dag.preds(v).end(), x) != dag.preds(v).end()) continue;
          bool covered = will_be_blue.count(x) || other_copy(p, x);
          std::int64_t key;
          if (policy.eviction == Eviction::FarthestNextUse) {
            std::int64_t nu = open_succ[x] > 0 ? next_use(x) : kNever;
            key = -nu;  // farther first
          } else {
            key = last_use[p - 1][x];
          }
          // values nobody needs again go first regardless of policy
          if (open_succ[x] == 0 && (covered || !dag.is_sink(x))) key = std::numeric_limits<std::int64_t>::min();
          cands.push_back({x, key});
        }
        std::sort(cands.begin(), cands.end(), [&](const Cand &a, const Cand &c) {
          if (a.key != c.key) return a.key < c.key;
          return a.v < c.v;
        });
        if (static_cast<std::int64_t>(cands.size()) < excess) {
          throw InfeasibleError("greedy cannot free enough fast memory on processor " + std::to_string(p));
        }
        for (std::int64_t i = 0; i < excess; ++i) {
          NodeId x = cands[i].v;
          // re-check: an earlier eviction this round may have removed the other copy
          bool live = open_succ[x] > 0 || dag.is_sink(x);
          if (live && !will_be_blue.count(x) && !other_copy(p, x)) schedule_save(p, x);
          evicted[p - 1].insert(x);
          evictions.push_back({p, x});
        }
        for (NodeId u : missing) loads.push_back({p, u});
      }

      b.push_batched(RuleKind::Save, saves);
      if (!evictions.empty()) b.push(TransitionRule::remove(evictions));
      b.push_batched(RuleKind::Load, loads);

      std::vector<Placement> comp;
      for (int p = 1; p <= k; ++p)
        if (goal[p - 1]) comp.push_back({p, *goal[p - 1]});
      b.push(TransitionRule::compute(comp));
      ++clock;
      for (const Placement &pl : comp) {
        computed[pl.node] = true;
        ++done;
        last_use[pl.shade - 1][pl.node] = clock;
        for (NodeId u : dag.preds(pl.node)) {
          --open_succ[u];
          last_use[pl.shade - 1][u] = clock;
        }
      }
      if (policy.save_policy == SavePolicy::WriteThroughIfNeededLater) {
        std::vector<Placement> wt;
        for (const Placement &pl : comp)
          if (open_succ[pl.node] > 0) wt.push_back(pl);
        if (!wt.empty()) b.push(TransitionRule::save(wt));
      }
    }
    b.finish();
  }
};

}  // namespace

Strategy greedy_schedule(const ProblemInstance &instance, const CompDag &dag, const GreedyPolicy &policy) {
  if (instance.k < 1) throw InfeasibleError("at least one processor is needed");
  if (instance.r <= static_cast<std::int64_t>(dag.max_in_degree())) {
    throw InfeasibleError("r=" + std::to_string(instance.r) + " cannot hold a node and its " +
                          std::to_string(dag.max_in_degree()) + " inputs");
  }
  if (instance.variant == RuleVariant::NoDelete) throw VariantError("greedy evicts, which needs deletions");
  ProblemInstance plain = instance;
  if (plain.variant == RuleVariant::DirectSend) plain.variant = RuleVariant::Mpp;
  StrategyBuilder b(plain, dag);
  GreedyRun run(plain, dag, policy, b);
  run.run();
  Strategy s = b.take();
  if (instance.variant == RuleVariant::DirectSend) return rewrite_direct_send(instance, dag, s);
  return s;
}

}  // namespace pebble
