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
#include <map>
#include <set>

#include "pebble/errors.hpp"
#include "pebble/strategies.hpp"
#include "pebble/towers.hpp"

namespace pebble {

namespace {

using Program = StrategyBuilder::Program;

struct KindName {
  WitnessKind kind;
  const char *name;
  const char *family;
};

constexpr KindName kKinds[] = {
    {WitnessKind::Zipper1p, "zipper-1p", "zipper"},
    {WitnessKind::Zipper2p, "zipper-2p", "zipper"},
    {WitnessKind::SkipChain, "skip-chain", "skip-chain"},
    {WitnessKind::VcReduction, "vc-reduction", "vc-reduction"},
    {WitnessKind::CliqueReduction, "clique-reduction", "clique-reduction"},
    {WitnessKind::GreedyAdversarialA, "greedy-adversarial-a", "greedy-adversarial-a"},
    {WitnessKind::GreedyAdversarialB, "greedy-adversarial-b", "greedy-adversarial-b"},
    {WitnessKind::SubgroupCycle, "subgroup-cycle", "subgroup-cycle"},
    {WitnessKind::Fig1_1p, "fig1-1p", "fig1"},
    {WitnessKind::Fig1_2p, "fig1-2p", "fig1"},
    {WitnessKind::IoTradeoffIncrease, "io-tradeoff-increase", "io-tradeoff-increase"},
    {WitnessKind::IoTradeoffDecrease, "io-tradeoff-decrease", "io-tradeoff-decrease"},
};

const KindName &entry(WitnessKind k) {
  for (const KindName &e : kKinds)
    if (e.kind == k) return e;
  throw MismatchError("unknown witness kind");
}

void need_k(const ProblemInstance &inst, int k) {
  if (inst.k < k) {
    throw MismatchError("this witness needs at least " + std::to_string(k) + " processors, got " +
                        std::to_string(inst.k));
  }
}

std::vector<NodeId> nodes_of(const ReductionArtifact &a, const std::string &name) {
  return a.has_group(name) ? a.group(name) : std::vector<NodeId>{};
}

// Computes a path where each element may also read nodes off the path; those are
// brought in first and dropped right after use.
void compute_with_inputs(StrategyBuilder &b, const CompDag &dag, int shade, const std::vector<NodeId> &path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    std::vector<NodeId> brought;
    for (NodeId y : dag.preds(path[i])) {
      if (i > 0 && y == path[i - 1]) continue;
      if (!b.red(shade, y)) {
        b.bring(shade, y);
        brought.push_back(y);
      }
    }
    b.compute(shade, path[i]);
    if (i > 0) b.drop(shade, path[i - 1]);
    b.drop(shade, brought);
  }
}

struct ZipperView {
  std::vector<std::vector<NodeId>> groups;
  std::vector<NodeId> chain;
  int first = 0;
  int group_of(std::size_t i) const { return static_cast<int>((first + i) % groups.size()); }
};

ZipperView zipper_view(const ReductionArtifact &a, const std::string &prefix) {
  ZipperView z;
  int count = a.params.count("groups") ? static_cast<int>(a.param("groups")) : 2;
  z.first = a.params.count("first_group") ? static_cast<int>(a.param("first_group")) : 0;
  if (a.family == "greedy-adversarial-a") z.first = 1;
  for (int j = 0; j < count; ++j) z.groups.push_back(nodes_of(a, prefix + "S" + std::to_string(j + 1)));
  z.chain = a.group(prefix + "main");
  return z;
}

// One processor: keep all groups when they fit, otherwise reload a group per chain node.
void zipper_single(StrategyBuilder &b, const ReductionArtifact &a, const ZipperView &z, int shade, bool force_reload) {
  const CompDag &dag = a.dag;
  std::int64_t total = 0, widest = 0;
  for (const auto &g : z.groups) {
    total += static_cast<std::int64_t>(g.size());
    widest = std::max<std::int64_t>(widest, static_cast<std::int64_t>(g.size()));
  }
  const std::int64_t held = static_cast<std::int64_t>(b.red_nodes(shade).size());
  if (!force_reload && held + total + 2 <= b.instance().r) {
    for (const auto &g : z.groups)
      for (NodeId u : g) compute_with_inputs(b, dag, shade, arc_path(a, u));
    b.compute_path(shade, z.chain);
    return;
  }
  if (held + widest + 2 > b.instance().r) throw WitnessUnavailableError("fast memory too small to reload a group");

  std::vector<int> uses_left(z.groups.size(), 0);
  for (std::size_t i = 0; i < z.chain.size(); ++i) ++uses_left[z.group_of(i)];
  const int g0 = z.group_of(0);
  for (std::size_t j = 0; j < z.groups.size(); ++j) {
    if (static_cast<int>(j) == g0) continue;
    for (NodeId u : z.groups[j]) {
      compute_with_inputs(b, dag, shade, arc_path(a, u));
      b.save(shade, u);
      b.drop(shade, u);
    }
  }
  for (NodeId u : z.groups[g0]) compute_with_inputs(b, dag, shade, arc_path(a, u));

  int resident = g0;
  for (std::size_t i = 0; i < z.chain.size(); ++i) {
    const int j = z.group_of(i);
    if (j != resident) {
      for (NodeId u : z.groups[resident])
        if (uses_left[resident] > 0 && !b.blue(u)) b.save(shade, u);
      b.drop(shade, z.groups[resident]);
      for (NodeId u : z.groups[j]) b.load(shade, u);
      resident = j;
    }
    b.compute(shade, z.chain[i]);
    --uses_left[j];
    if (i > 0) b.drop(shade, z.chain[i - 1]);
  }
}

// Group j lives on processor j+1; the chain hops between them through slow memory.
void zipper_pair(StrategyBuilder &b, const ReductionArtifact &a, const ZipperView &z) {
  const CompDag &dag = a.dag;
  if (z.groups.size() != 2) throw MismatchError("the two-processor zipper witness needs exactly two input groups");
  for (int j = 0; j < 2; ++j)
    for (NodeId u : z.groups[j]) compute_with_inputs(b, dag, j + 1, arc_path(a, u));
  std::set<NodeId> group_nodes;
  for (const auto &g : z.groups) group_nodes.insert(g.begin(), g.end());
  for (std::size_t i = 0; i < z.chain.size(); ++i) {
    const int p = z.group_of(i) + 1;
    std::vector<NodeId> stale;
    for (NodeId x : b.red_nodes(p))
      if (!group_nodes.count(x) && (i == 0 || x != z.chain[i - 1])) stale.push_back(x);
    b.drop(p, stale);
    if (i > 0) b.bring(p, z.chain[i - 1]);
    b.compute(p, z.chain[i]);
  }
}

void clear_all(StrategyBuilder &b) {
  for (int p = 1; p <= b.instance().k; ++p) b.drop_all_except(p);
}

Strategy skip_chain(const ReductionArtifact &a, const ProblemInstance &inst) {
  const int copies = static_cast<int>(a.param("copies"));
  const int m = static_cast<int>(a.param("m"));
  need_k(inst, copies);
  StrategyBuilder b(inst, a.dag);
  std::vector<std::pair<int, Program>> progs;
  for (int c = 0; c < copies; ++c) {
    const auto &u = a.group("copy" + std::to_string(c));
    Program p;
    for (int i = 0; i < m; ++i) {
      p.push_back({RuleKind::Compute, u[i]});
      p.push_back({RuleKind::Save, u[i]});
      if (i > 0) p.push_back({RuleKind::Delete, u[i - 1]});
    }
    for (int i = m; i < 2 * m; ++i) {
      const bool skip_is_chain = (i - m == i - 1);
      if (!skip_is_chain) p.push_back({RuleKind::Load, u[i - m]});
      p.push_back({RuleKind::Compute, u[i]});
      p.push_back({RuleKind::Delete, u[i - 1]});
      if (!skip_is_chain) p.push_back({RuleKind::Delete, u[i - m]});
    }
    progs.emplace_back(c + 1, std::move(p));
  }
  b.run_parallel(progs);
  b.finish();
  return b.take();
}

Strategy adversarial_b(const ReductionArtifact &a, const ProblemInstance &inst) {
  need_k(inst, 2);
  const int m = static_cast<int>(a.param("m"));
  const auto &u = a.group("u"), &v = a.group("v"), &w = a.group("w"), &z = a.group("z");
  StrategyBuilder b(inst, a.dag);
  auto run = [&](const std::vector<NodeId> &x, int from1, const std::vector<NodeId> &y, int from2, int len) {
    Program p1, p2;
    for (int i = 0; i < len; ++i) {
      p1.push_back({RuleKind::Compute, x[from1 + i]});
      p2.push_back({RuleKind::Compute, y[from2 + i]});
    }
    b.run_parallel({{1, p1}, {2, p2}});
  };
  run(u, 0, v, 0, m);
  b.push(TransitionRule::save({{1, u[m - 1]}, {2, v[m - 1]}}));
  b.push(TransitionRule::load({{1, v[m - 1]}, {2, u[m - 1]}}));
  run(v, m, u, m, m);
  run(w, 0, z, 0, m);
  b.finish();
  return b.take();
}

Strategy subgroup_cycle(const ReductionArtifact &a, const ProblemInstance &inst) {
  const int kk = static_cast<int>(a.param("k"));
  const auto &chain = a.group("main");
  std::vector<std::vector<NodeId>> sub;
  for (int i = 1; i <= kk; ++i)
    for (int l = 1; l <= kk; ++l) sub.push_back(a.group("S" + std::to_string(i) + "," + std::to_string(l)));
  StrategyBuilder b(inst, a.dag);
  if (inst.k == 1) {
    for (const auto &s : sub)
      for (NodeId x : s) b.compute(1, x);
    b.compute_path(1, chain);
    b.finish();
    return b.take();
  }
  need_k(inst, kk);
  for (const auto &s : sub) {
    for (NodeId x : s) {
      b.compute(1, x);
      b.save(1, x);
      b.drop(1, x);
    }
  }
  for (std::size_t t = 0; t < chain.size(); ++t) {
    const int p = static_cast<int>(t % kk) + 1;
    std::vector<NodeId> inputs;
    for (std::int64_t idx : a.tables.at("tuple:" + std::to_string(t)))
      inputs.insert(inputs.end(), sub[idx].begin(), sub[idx].end());
    std::vector<NodeId> keep = inputs;
    if (t > 0) keep.push_back(chain[t - 1]);
    b.drop_all_except(p, keep);
    if (t > 0) b.bring(p, chain[t - 1]);
    for (NodeId x : inputs)
      if (!b.red(p, x)) b.load(p, x);
    b.compute(p, chain[t]);
  }
  b.finish();
  return b.take();
}

Strategy vc_reduction(const ReductionArtifact &a, const ProblemInstance &inst, const std::vector<int> &cover) {
  if (!a.input_graph) throw MismatchError("vc-reduction artifact lacks its input graph");
  const Graph &graph = *a.input_graph;
  std::set<int> in_cover(cover.begin(), cover.end());
  for (int v : in_cover)
    if (v < 0 || v >= graph.n) throw WitnessUnavailableError("cover node out of range");
  for (auto [u, v] : graph.edges)
    if (!in_cover.count(u) && !in_cover.count(v)) throw WitnessUnavailableError("given set is not a vertex cover");
  const CompDag &dag = a.dag;
  auto adj = graph.neighbors();
  StrategyBuilder b(inst, dag);
  auto tag = [](int v) { return std::to_string(v); };
  auto src = [&](NodeId x) { b.compute_path(1, arc_path(a, x)); };

  auto first_group = [&](int v, bool keep_commons) {
    const auto &common = a.group("common:" + tag(v));
    const auto &own = a.group("own:" + tag(v));
    for (NodeId x : common) src(x);
    for (NodeId x : own) src(x);
    for (int u : adj[v]) {
      const auto &w = a.group("tchain:" + tag(v) + ":" + tag(u));
      src(w[0]);
      b.compute(1, w[1]);
      b.drop(1, w[0]);
      b.save(1, w[1]);
      b.compute(1, w[2]);
      b.drop(1, w[1]);
      b.compute(1, w[3]);
      b.drop(1, w[2]);
      b.save(1, w[3]);
      b.drop(1, w[3]);
    }
    if (keep_commons) {
      b.drop(1, own);
    } else {
      for (NodeId x : common) b.save(1, x);
      b.drop_all_except(1);
    }
  };

  std::vector<int> order_second;
  for (int v = 0; v < graph.n; ++v)
    if (!in_cover.count(v)) order_second.push_back(v);
  for (int v : in_cover) order_second.push_back(v);
  const int last_target_node = order_second.back();

  auto second_group = [&](int v) {
    for (NodeId x : a.group("common:" + tag(v)))
      if (!b.red(1, x)) b.load(1, x);
    for (int u : adj[v]) b.load(1, a.group("tchain:" + tag(u) + ":" + tag(v))[1]);
    for (NodeId x : a.group("extra:" + tag(v))) src(x);
    NodeId t = a.group("target:" + tag(v)).front();
    b.compute(1, t);
    b.drop_all_except(1, {t});
    if (v != last_target_node) {
      b.save(1, t);
      b.drop(1, t);
    }
  };

  for (int v : in_cover) first_group(v, false);
  for (int v = 0; v < graph.n; ++v) {
    if (in_cover.count(v)) continue;
    first_group(v, true);
    second_group(v);
  }
  for (int v : in_cover) second_group(v);
  b.finish();
  return b.take();
}

void fig1_half(Program &p, const std::vector<NodeId> &x, const std::vector<NodeId> &y, NodeId top) {
  using K = RuleKind;
  p.insert(p.end(), {{K::Compute, x[0]}, {K::Compute, x[1]}, {K::Compute, x[2]}, {K::Delete, x[0]}, {K::Delete, x[1]},
                     {K::Save, x[2]},    {K::Delete, x[2]},  {K::Compute, y[0]}, {K::Compute, y[1]}, {K::Compute, y[2]},
                     {K::Delete, y[0]},  {K::Delete, y[1]},  {K::Load, x[2]},    {K::Compute, top},  {K::Delete, x[2]},
                     {K::Delete, y[2]}});
}

Strategy fig1(const ReductionArtifact &a, const ProblemInstance &inst, bool two) {
  const NodeId v5 = a.group("v5").front(), v6 = a.group("v6").front(), v7 = a.group("v7").front();
  Program left, right;
  fig1_half(left, a.group("left_a"), a.group("left_b"), v5);
  fig1_half(right, a.group("right_a"), a.group("right_b"), v6);
  StrategyBuilder b(inst, a.dag);
  if (two) {
    need_k(inst, 2);
    b.run_parallel({{1, left}, {2, right}});
    b.bring(1, v6);
  } else {
    b.run_parallel({{1, left}});
    b.save(1, v5);
    b.drop(1, v5);
    b.run_parallel({{1, right}});
    b.load(1, v5);
  }
  b.compute(1, v7);
  b.finish();
  return b.take();
}

Strategy io_increase(const ReductionArtifact &a, const ProblemInstance &inst) {
  const int copies = static_cast<int>(a.param("copies"));
  StrategyBuilder b(inst, a.dag);
  NodeId hub = a.group("hub0").front();
  if (inst.k == 1) {
    b.compute(1, hub);
    for (int c = 0; c < copies; ++c) {
      const auto &l = a.group("left" + std::to_string(c));
      const auto &r = a.group("right" + std::to_string(c));
      NodeId next = a.group("hub" + std::to_string(c + 1)).front();
      b.compute_path(1, l);
      b.compute_path(1, r);
      b.drop(1, hub);
      b.compute(1, next);
      b.drop(1, std::vector<NodeId>{l.back(), r.back()});
      hub = next;
    }
  } else {
    b.push(TransitionRule::compute({{1, hub}, {2, hub}}));
    for (int c = 0; c < copies; ++c) {
      const auto &l = a.group("left" + std::to_string(c));
      const auto &r = a.group("right" + std::to_string(c));
      NodeId next = a.group("hub" + std::to_string(c + 1)).front();
      Program p1, p2;
      for (std::size_t i = 0; i < l.size(); ++i) {
        p1.push_back({RuleKind::Compute, l[i]});
        p1.push_back({RuleKind::Delete, i == 0 ? hub : l[i - 1]});
        p2.push_back({RuleKind::Compute, r[i]});
        p2.push_back({RuleKind::Delete, i == 0 ? hub : r[i - 1]});
      }
      b.run_parallel({{1, p1}, {2, p2}});
      b.push(TransitionRule::save({{1, l.back()}, {2, r.back()}}));
      b.push(TransitionRule::load({{1, r.back()}, {2, l.back()}}));
      b.push(TransitionRule::compute({{1, next}, {2, next}}));
      b.push(TransitionRule::remove({{1, l.back()}, {1, r.back()}, {2, l.back()}, {2, r.back()}}));
      hub = next;
    }
  }
  b.finish();
  return b.take();
}

Strategy io_decrease(const ReductionArtifact &a, const ProblemInstance &inst) {
  const auto &chain = a.group("chain");
  ZipperView z = zipper_view(a, "");
  StrategyBuilder b(inst, a.dag);
  if (inst.k == 1) {
    zipper_single(b, a, z, 1, true);
    b.drop_all_except(1, {z.chain.back()});
    b.compute_path(1, chain);
    b.finish();
    return b.take();
  }
  need_k(inst, 2);
  Program p1, p2;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    p1.push_back({RuleKind::Compute, chain[i]});
    if (i > 0) p1.push_back({RuleKind::Delete, chain[i - 1]});
  }
  for (std::size_t i = 0; i < z.chain.size(); ++i) {
    const auto &grp = z.groups[z.group_of(i)];
    for (NodeId u : grp) {
      auto path = arc_path(a, u);
      for (std::size_t j = 0; j < path.size(); ++j) {
        p2.push_back({RuleKind::Compute, path[j]});
        if (j > 0) p2.push_back({RuleKind::Delete, path[j - 1]});
      }
    }
    p2.push_back({RuleKind::Compute, z.chain[i]});
    for (NodeId u : grp) p2.push_back({RuleKind::Delete, u});
    if (i > 0) p2.push_back({RuleKind::Delete, z.chain[i - 1]});
  }
  b.run_parallel({{1, p1}, {2, p2}});
  b.finish();
  return b.take();
}

Strategy build(WitnessKind kind, const ReductionArtifact &a, const ProblemInstance &inst, const WitnessInput &in) {
  switch (kind) {
    case WitnessKind::Zipper1p: {
      StrategyBuilder b(inst, a.dag);
      zipper_single(b, a, zipper_view(a, ""), 1, false);
      b.finish();
      return b.take();
    }
    case WitnessKind::Zipper2p: {
      need_k(inst, 2);
      StrategyBuilder b(inst, a.dag);
      zipper_pair(b, a, zipper_view(a, ""));
      b.finish();
      return b.take();
    }
    case WitnessKind::GreedyAdversarialA: {
      need_k(inst, 2);
      StrategyBuilder b(inst, a.dag);
      const char *prefixes[] = {"A:", "B:"};
      for (int c = 0; c < 2; ++c) {
        ZipperView z = zipper_view(a, prefixes[c]);
        zipper_pair(b, a, z);
        if (c == 0) {
          NodeId end = z.chain.back();
          b.save(b.holder(end), end);
          clear_all(b);
        }
      }
      b.finish();
      return b.take();
    }
    case WitnessKind::SkipChain: return skip_chain(a, inst);
    case WitnessKind::GreedyAdversarialB: return adversarial_b(a, inst);
    case WitnessKind::SubgroupCycle: return subgroup_cycle(a, inst);
    case WitnessKind::VcReduction:
      if (in.cover.empty() && a.input_graph && a.input_graph->m() > 0) {
        throw WitnessUnavailableError("vc-reduction witness needs a vertex cover");
      }
      return vc_reduction(a, inst, in.cover);
    case WitnessKind::CliqueReduction: {
      if (in.clique.empty()) throw WitnessUnavailableError("clique-reduction witness needs a clique");
      auto moves = clique_witness_progression(a, in.clique);
      return progression_to_strategy(a, inst, moves);
    }
    case WitnessKind::Fig1_1p: return fig1(a, inst, false);
    case WitnessKind::Fig1_2p: return fig1(a, inst, true);
    case WitnessKind::IoTradeoffIncrease: return io_increase(a, inst);
    case WitnessKind::IoTradeoffDecrease: return io_decrease(a, inst);
  }
  throw MismatchError("unknown witness kind");
}

}  // namespace

std::string to_string(WitnessKind kind) { return entry(kind).name; }

WitnessKind parse_witness_kind(const std::string &s) {
  for (const KindName &e : kKinds)
    if (s == e.name) return e.kind;
  throw ParseError("unknown witness kind '" + s + "'");
}

std::vector<WitnessKind> witnesses_for_family(const std::string &family) {
  std::vector<WitnessKind> out;
  for (const KindName &e : kKinds)
    if (family == e.family) out.push_back(e.kind);
  return out;
}

Strategy witness_strategy(WitnessKind kind, const ReductionArtifact &artifact, const ProblemInstance &instance,
                          const WitnessInput &input) {
  const KindName &e = entry(kind);
  if (artifact.family != e.family) {
    throw MismatchError(std::string("witness ") + e.name + " needs a " + e.family + " artifact, got " +
                        artifact.family);
  }
  ProblemInstance plain = instance;
  if (plain.variant == RuleVariant::DirectSend) plain.variant = RuleVariant::Mpp;
  Strategy s;
  try {
    s = build(kind, artifact, plain, input);
  } catch (const WitnessUnavailableError &) {
    throw;
  } catch (const MismatchError &) {
    throw;
  } catch (const PebbleError &err) {
    throw WitnessUnavailableError(std::string(e.name) + " does not fit this instance: " + err.what());
  }
  if (instance.variant == RuleVariant::DirectSend) return rewrite_direct_send(instance, artifact.dag, s);
  return s;
}

}  // namespace pebble
