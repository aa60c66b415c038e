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
#include "pebble/generators.hpp"

#include <algorithm>
#include <random>

#include "pebble/errors.hpp"

namespace pebble {

namespace {

class DagBuilder {
 public:
  NodeId add(std::string label = {}) {
    labels_.push_back(std::move(label));
    return static_cast<NodeId>(labels_.size() - 1);
  }
  std::vector<NodeId> add_many(std::int64_t count, const std::string &prefix = {}) {
    std::vector<NodeId> out;
    for (std::int64_t i = 0; i < count; ++i) out.push_back(add(prefix.empty() ? std::string{} : prefix + std::to_string(i + 1)));
    return out;
  }
  // chain of fresh nodes, linked in order
  std::vector<NodeId> add_path(std::int64_t count, const std::string &prefix = {}) {
    auto nodes = add_many(count, prefix);
    for (std::size_t i = 1; i < nodes.size(); ++i) edge(nodes[i - 1], nodes[i]);
    return nodes;
  }
  void edge(NodeId u, NodeId v) { edges_.push_back({u, v}); }
  void complete(const std::vector<NodeId> &from, const std::vector<NodeId> &to) {
    for (NodeId u : from)
      for (NodeId v : to) edge(u, v);
  }
  std::size_t size() const { return labels_.size(); }

  CompDag build(bool dedupe = false) {
    if (dedupe) {
      std::sort(edges_.begin(), edges_.end());
      edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }
    bool any = std::any_of(labels_.begin(), labels_.end(), [](const std::string &s) { return !s.empty(); });
    return build_dag(labels_.size(), edges_, any ? labels_ : std::vector<std::string>{});
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

// Fresh chain of 2g nodes feeding target; recorded as group "arc:<target>".
std::vector<NodeId> add_arc(DagBuilder &b, ReductionArtifact &a, NodeId target, std::int64_t g) {
  auto chain = b.add_path(2 * g);
  if (!chain.empty()) b.edge(chain.back(), target);
  a.groups["arc:" + std::to_string(target)] = chain;
  return chain;
}

std::vector<NodeId> concat(const std::vector<NodeId> &x, const std::vector<NodeId> &y) {
  std::vector<NodeId> out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

bool is_prime(int k) {
  if (k < 2) return false;
  for (int p = 2; p * p <= k; ++p)
    if (k % p == 0) return false;
  return true;
}

struct ZipperCore {
  std::vector<std::vector<NodeId>> groups;  // empty when the group feeds no chain node
  std::vector<NodeId> chain;
};

ZipperCore add_zipper(DagBuilder &b, ReductionArtifact &a, const ZipperParams &p, const std::string &prefix,
                      bool omit_unused = false) {
  ZipperCore z;
  z.groups.resize(static_cast<std::size_t>(p.groups));
  std::vector<bool> used(static_cast<std::size_t>(p.groups), false);
  for (int i = 0; i < p.n0; ++i) used[(p.first_group + i) % p.groups] = true;
  for (int j = 0; j < p.groups; ++j) {
    if (omit_unused && !used[j]) continue;
    z.groups[j] = b.add_many(p.d);
    a.groups[prefix + "S" + std::to_string(j + 1)] = z.groups[j];
  }
  z.chain = b.add_path(p.n0);
  a.groups[prefix + "main"] = z.chain;
  for (int i = 0; i < p.n0; ++i) {
    for (NodeId u : z.groups[(p.first_group + i) % p.groups]) b.edge(u, z.chain[i]);
  }
  return z;
}

void check_zipper(const ZipperParams &p) {
  if (p.d < 1 || p.n0 < 1) throw ParamError("zipper needs d >= 1 and n0 >= 1");
  if (p.groups < 1) throw ParamError("zipper needs at least one input group");
  if (p.first_group < 0 || p.first_group >= p.groups) throw ParamError("first group out of range");
  if (p.g < 0) throw ParamError("g must be non-negative");
}

}  // namespace

ReductionArtifact gen_chain(int len) {
  if (len < 1) throw ParamError("chain length must be at least 1");
  ReductionArtifact a;
  DagBuilder b;
  a.family = "chain";
  a.params["len"] = len;
  a.groups["chain"] = b.add_path(len);
  a.dag = b.build();
  a.prescribed = Prescribed{1, 2, 1};
  a.expected["opt_total"] = Rational(len);
  return a;
}

ReductionArtifact gen_independent_chains(int count, int len) {
  if (len < 1 || count < 1) throw ParamError("independent chains need count >= 1 and len >= 1");
  ReductionArtifact a;
  DagBuilder b;
  a.family = "independent-chains";
  a.params["count"] = count;
  a.params["len"] = len;
  for (int c = 0; c < count; ++c) a.groups["chain" + std::to_string(c)] = b.add_path(len);
  a.dag = b.build();
  a.prescribed = Prescribed{count, 2, 1};
  a.expected["opt_total_k_procs"] = Rational(len);
  return a;
}

ReductionArtifact gen_zipper(const ZipperParams &p) {
  if (p.subgroup_k > 0) return gen_subgroup_cycle(p.subgroup_k, p.d, p.n0);
  check_zipper(p);
  ReductionArtifact a;
  DagBuilder b;
  a.family = "zipper";
  a.params = {{"d", p.d}, {"n0", p.n0}, {"groups", p.groups}, {"first_group", p.first_group},
              {"antirecompute", p.antirecompute ? 1 : 0}, {"g", p.g}};
  ZipperCore z = add_zipper(b, a, p, "");
  if (p.antirecompute) {
    for (const auto &grp : z.groups)
      for (NodeId u : grp) add_arc(b, a, u, p.g);
  }
  a.dag = b.build();
  a.prescribed = Prescribed{1, 2 * p.d + 2, p.g};
  a.expected["total_1p_r_2d_plus_2"] = Rational(static_cast<std::int64_t>(a.dag.n()));
  a.expected["per_chain_node_2p_r_d_plus_2"] = Rational(2 * p.g + 1);
  return a;
}

ReductionArtifact gen_subgroup_cycle(int k, int d, int n0) {
  if (!is_prime(k)) throw ParamError("subgroup cycle needs a prime processor count");
  if (d < k || d % k != 0) throw ParamError("subgroup cycle needs d divisible by k");
  if (n0 < 1) throw ParamError("subgroup cycle needs n0 >= 1");
  ReductionArtifact a;
  DagBuilder b;
  a.family = "subgroup-cycle";
  a.params = {{"k", k}, {"d", d}, {"n0", n0}};
  const int part = d / k;
  // subgroup (i, l), both 1-based, has index (i-1)*k + (l-1)
  std::vector<std::vector<NodeId>> sub(static_cast<std::size_t>(k * k));
  for (int i = 1; i <= k; ++i) {
    for (int l = 1; l <= k; ++l) {
      auto &s = sub[(i - 1) * k + (l - 1)];
      s = b.add_many(part);
      a.groups["S" + std::to_string(i) + "," + std::to_string(l)] = s;
    }
  }
  auto chain = b.add_path(n0);
  a.groups["main"] = chain;
  for (int t = 0; t < n0; ++t) {
    int pos = t % (k * k);
    int bi = pos / k + 1;  // batch
    int j = pos % k + 1;   // position in batch
    std::vector<std::int64_t> tuple;
    for (int l = 1; l <= k; ++l) {
      int first = ((j - 1) + (l - 1) * (bi - 1)) % k + 1;
      int idx = (first - 1) * k + (l - 1);
      tuple.push_back(idx);
      for (NodeId u : sub[idx]) b.edge(u, chain[t]);
    }
    a.tables["tuple:" + std::to_string(t)] = tuple;
  }
  a.dag = b.build();
  a.prescribed = Prescribed{k, d + 2, 1};
  a.expected["per_node_io_lower"] = Rational(static_cast<std::int64_t>(k - 1) * d, k);
  a.notes.push_back("subgroup index of S(i,l) is (i-1)*k + (l-1)");
  return a;
}

ReductionArtifact gen_skip_chain(int m, int copies) {
  if (m < 1 || copies < 1) throw ParamError("skip chain needs m >= 1 and copies >= 1");
  ReductionArtifact a;
  DagBuilder b;
  a.family = "skip-chain";
  a.params = {{"m", m}, {"copies", copies}};
  for (int c = 0; c < copies; ++c) {
    auto u = b.add_path(2 * m);
    for (int i = 0; i < m; ++i) {
      if (m + i != i + 1) b.edge(u[i], u[m + i]);
    }
    a.groups["copy" + std::to_string(c)] = u;
  }
  a.dag = b.build();
  a.prescribed = Prescribed{copies, 3, 1};
  a.expected["witness_compute_steps"] = Rational(2 * m);
  a.expected["witness_io_steps"] = Rational(2 * m);
  return a;
}

ReductionArtifact gen_greedy_adversarial_a(int d, std::int64_t g, int n0) {
  ZipperParams p;
  p.d = d;
  p.n0 = n0;
  p.g = g;
  p.antirecompute = true;
  p.first_group = 1;
  check_zipper(p);
  if (n0 < 2) throw ParamError("adversarial zipper needs n0 >= 2");
  ReductionArtifact a;
  DagBuilder b;
  a.family = "greedy-adversarial-a";
  a.params = {{"d", d}, {"g", g}, {"n0", n0}};
  for (const std::string prefix : {"A:", "B:"}) {
    ZipperCore z = add_zipper(b, a, p, prefix);
    std::vector<NodeId> inputs = concat(z.groups[0], z.groups[1]);
    std::vector<std::vector<NodeId>> arcs;
    for (NodeId u : inputs) arcs.push_back(add_arc(b, a, u, g));
    // u_i feeds the head of the chain in front of u_{i+1}
    for (std::size_t i = 0; i + 1 < inputs.size(); ++i) {
      NodeId head = arcs[i + 1].empty() ? inputs[i + 1] : arcs[i + 1].front();
      b.edge(inputs[i], head);
    }
    a.groups[prefix + "inputs"] = inputs;
  }
  a.dag = b.build();
  a.prescribed = Prescribed{2, d + 2, g};
  a.expected["greedy_per_chain_node"] = Rational(1 + d * g);
  return a;
}

ReductionArtifact gen_greedy_adversarial_b(int m, std::int64_t g) {
  if (m < 1) throw ParamError("adversarial chains need m >= 1");
  ReductionArtifact a;
  DagBuilder b;
  a.family = "greedy-adversarial-b";
  a.params = {{"m", m}, {"g", g}};
  auto u = b.add_path(2 * m, "u");
  auto v = b.add_path(2 * m, "v");
  auto w = b.add_path(m, "w");
  auto z = b.add_path(m, "z");
  for (int i = 0; i < m; ++i) {
    b.edge(u[i], w[i]);
    b.edge(v[m + i], w[i]);
    b.edge(u[m + i], z[i]);
    b.edge(v[i], z[i]);
  }
  b.edge(u[2 * m - 1], z[0]);
  b.edge(v[2 * m - 1], w[0]);
  a.groups = {{"u", u}, {"v", v}, {"w", w}, {"z", z}};
  a.dag = b.build(true);
  a.prescribed = Prescribed{2, static_cast<std::int64_t>(a.dag.n()) + 1, g};
  a.expected["witness_total"] = Rational(3 * m + 2 * g);
  a.expected["greedy_total_lower"] = Rational(3 * m + 2 * g * m);
  return a;
}

ReductionArtifact gen_vc_reduction(const Graph &graph, int b0, int b1, std::int64_t g) {
  if (!graph.is_cubic()) throw NotCubicError("vertex-cover reduction needs a 3-regular graph");
  if (b1 <= 3) throw ParamError("B1 must exceed 3");
  if (b0 < 1) throw ParamError("B0 must be at least 1");
  if (g < 1) throw ParamError("g must be at least 1");
  ReductionArtifact a;
  DagBuilder b;
  a.family = "vc-reduction";
  const int n_nodes = graph.n;
  const int n_edges = graph.m();
  a.params = {{"N", n_nodes}, {"M", n_edges}, {"B0", b0}, {"B1", b1}, {"g", g}};
  a.input_graph = graph;
  auto adj = graph.neighbors();

  std::vector<std::vector<NodeId>> common(n_nodes), own(n_nodes), extra(n_nodes);
  std::vector<NodeId> target(n_nodes);
  // tchain[v][u] for the chain from S1(v) into S2(u)
  std::map<std::pair<int, int>, std::vector<NodeId>> tchain;
  std::vector<NodeId> sources;
  for (int v = 0; v < n_nodes; ++v) {
    std::string tag = std::to_string(v);
    common[v] = b.add_many(b0, "c" + tag + "_");
    own[v] = b.add_many(b1, "o" + tag + "_");
    a.groups["common:" + tag] = common[v];
    a.groups["own:" + tag] = own[v];
    sources.insert(sources.end(), common[v].begin(), common[v].end());
    sources.insert(sources.end(), own[v].begin(), own[v].end());
    std::vector<NodeId> s1 = concat(common[v], own[v]);
    for (int u : adj[v]) {
      auto w = b.add_path(4, "w" + tag + ">" + std::to_string(u) + "_");
      for (int i = 1; i <= 3; ++i)
        for (NodeId x : s1) b.edge(x, w[i]);
      tchain[{v, u}] = w;
      a.groups["tchain:" + tag + ":" + std::to_string(u)] = w;
      sources.push_back(w[0]);
    }
  }
  for (int v = 0; v < n_nodes; ++v) {
    std::string tag = std::to_string(v);
    extra[v] = b.add_many(b1 - 2, "x" + tag + "_");
    target[v] = b.add("t" + tag);
    a.groups["extra:" + tag] = extra[v];
    a.groups["target:" + tag] = {target[v]};
    sources.insert(sources.end(), extra[v].begin(), extra[v].end());
    std::vector<NodeId> s2 = common[v];
    for (int u : adj[v]) s2.push_back(tchain[{u, v}][1]);
    s2.insert(s2.end(), extra[v].begin(), extra[v].end());
    a.groups["S2:" + tag] = s2;
    for (NodeId x : s2) b.edge(x, target[v]);
  }
  for (NodeId s : sources) add_arc(b, a, s, g);
  a.dag = b.build();
  const std::int64_t n = static_cast<std::int64_t>(a.dag.n());
  a.prescribed = Prescribed{1, b0 + b1 + 2, g};
  a.expected["n_formula"] = Rational(n_nodes * (2 * g * b0 + b0 + 4 * g * b1 + 2 * b1 + 2 * g + 11));
  a.expected["n_prime"] = Rational(n + (6 * n_edges + n_nodes - 1) * g);
  a.expected["alpha"] = Rational(2 * g * b0);
  return a;
}

CliqueLevelSizes clique_level_sizes(int n_nodes, int n_edges, int q) {
  CliqueLevelSizes s;
  const std::int64_t x = n_nodes + n_edges;
  const std::int64_t pairs = static_cast<std::int64_t>(q) * (q - 1) / 2;
  s.c1 = x * s.b2;
  s.b1 = 2 * s.c1;
  s.r = 3 * x * s.b2;
  const std::int64_t a = s.a, b1 = s.b1, b2 = s.b2, c1 = s.c1, c2 = s.c2, r = s.r;
  s.main = {
      r - 1 - x * a,
      r - 1 - x * a,
      r - 1 - (x - q) * a - b1 - (q - 1) * b2,
      r - 1 - (x - q) * a - q * b2,
      r - 1 - (x - q) * a - q * b2,
      r - 1 - (x - q - 1) * a - q * b2 - c1,
      r - 1 - (x - q - pairs) * a - q * b2 - pairs * c2,
      r - 1 - b1 - n_nodes * b2 - n_edges * a,
      r - 1 - b1 - n_nodes * b2 - n_edges * a,
  };
  return s;
}

namespace {

// Level-gadget wiring between consecutive levels u -> v.
void wire_levels(DagBuilder &b, const std::vector<NodeId> &u, const std::vector<NodeId> &v) {
  const std::size_t l = u.size(), lp = v.size();
  for (std::size_t i = 0; i < std::min(l, lp); ++i) b.edge(u[i], v[i]);
  b.edge(u[l - 1], v[0]);
  if (l > lp) {
    for (std::size_t i = lp; i < l; ++i) b.edge(u[i], v[lp - 1]);
  }
}

}  // namespace

ReductionArtifact gen_level_tower(const std::vector<std::int64_t> &sizes) {
  if (sizes.empty()) throw ParamError("a tower needs at least one level");
  for (std::int64_t s : sizes)
    if (s < 1) throw ParamError("level sizes must be positive");
  ReductionArtifact a;
  DagBuilder b;
  a.family = "level-tower";
  a.params["levels"] = static_cast<std::int64_t>(sizes.size());
  a.tables["sizes"] = sizes;
  Tower t;
  t.name = "tower";
  for (std::int64_t s : sizes) t.levels.push_back(b.add_path(s));
  t.wiring.assign(sizes.size(), LevelWiring::Gadget);
  t.prereqs.assign(sizes.size(), {});
  for (std::size_t i = 1; i < t.levels.size(); ++i) wire_levels(b, t.levels[i - 1], t.levels[i]);
  for (std::size_t i = 0; i < t.levels.size(); ++i) a.groups["tower:L" + std::to_string(i)] = t.levels[i];
  TowerMetadata meta;
  meta.towers.push_back(t);
  meta.copy_ranges.emplace_back(0, 1);
  a.dag = b.build(true);
  a.towers = std::move(meta);
  return a;
}

ReductionArtifact gen_clique_reduction(const Graph &graph, int q, int copies) {
  if (q < 1 || q > graph.n) throw ParamError("clique size must lie in [1, N]");
  if (copies < 1) throw ParamError("copy count must be at least 1");
  const int n_nodes = graph.n, n_edges = graph.m();
  CliqueLevelSizes s = clique_level_sizes(n_nodes, n_edges, q);
  const std::int64_t x = n_nodes + n_edges;
  if (!(s.c2 < s.a && s.a < s.b2 && (s.a - s.c2) > (s.b2 - s.a) && s.c1 > q * s.b2 && s.b1 > x * s.a + 1 &&
        s.r > 1 + s.b1 - n_nodes * s.b2 - n_edges * s.a)) {
    throw ParamError("clique-reduction parameter inequalities fail for this graph and q");
  }
  for (std::int64_t size : s.main) {
    if (size < 1) throw ParamError("a main-tower level would be empty for this graph and q");
  }

  ReductionArtifact a;
  DagBuilder b;
  a.family = "clique-reduction";
  a.params = {{"N", n_nodes}, {"M", n_edges}, {"q", q}, {"T", copies}, {"a", s.a}, {"b1", s.b1},
              {"b2", s.b2},   {"c1", s.c1},   {"c2", s.c2}, {"r", s.r}};
  a.tables["main_sizes"] = s.main;
  a.input_graph = graph;
  a.notes.push_back("node towers use levels [a, b1, b2] and edge towers [a, a, c1, c2]; inferred from pebble accounting");
  TowerMetadata meta;
  meta.copies = copies;

  NodeId carried = 0;  // sink of the previous copy
  for (int c = 0; c < copies; ++c) {
    const int base = static_cast<int>(meta.towers.size());
    const int main_idx = base;
    auto node_idx = [&](int v) { return base + 1 + v; };
    auto edge_idx = [&](int e) { return base + 1 + n_nodes + e; };
    std::string cp = "copy" + std::to_string(c) + ":";

    Tower main;
    main.name = "main";
    main.copy = c;
    if (c == 0) {
      main.levels.push_back({b.add("source")});
    } else {
      main.levels.push_back({carried});
      main.starts_pebbled = true;
    }
    for (int i = 0; i < 9; ++i) main.levels.push_back(b.add_path(s.main[i]));
    main.levels.push_back({b.add(c + 1 == copies ? "sink" : "junction")});
    main.wiring.assign(main.levels.size(), LevelWiring::Gadget);
    main.wiring[1] = LevelWiring::Complete;
    main.wiring[10] = LevelWiring::Complete;
    main.prereqs.assign(main.levels.size(), {});
    meta.towers.push_back(main);

    for (int v = 0; v < n_nodes; ++v) {
      Tower t;
      t.name = "node" + std::to_string(v);
      t.copy = c;
      t.levels = {b.add_path(s.a), b.add_path(s.b1), b.add_path(s.b2)};
      t.wiring.assign(3, LevelWiring::Gadget);
      t.prereqs.assign(3, {});
      t.prereqs[0].push_back({main_idx, 1});
      meta.towers.push_back(t);
    }
    for (int e = 0; e < n_edges; ++e) {
      auto [u, v] = graph.edges[e];
      Tower t;
      t.name = "edge" + std::to_string(e);
      t.copy = c;
      t.levels = {b.add_path(s.a), b.add_path(s.a), b.add_path(s.c1), b.add_path(s.c2)};
      t.wiring.assign(4, LevelWiring::Gadget);
      t.prereqs.assign(4, {});
      t.prereqs[0].push_back({main_idx, 1});
      t.prereqs[1].push_back({main_idx, 4});
      t.prereqs[2].push_back({node_idx(u), 2});
      t.prereqs[2].push_back({node_idx(v), 2});
      meta.towers.push_back(t);
    }
    Tower &mt = meta.towers[main_idx];
    for (int t = 0; t < n_nodes + n_edges; ++t) {
      int ti = base + 1 + t;
      int last = static_cast<int>(meta.towers[ti].levels.size()) - 1;
      mt.prereqs[2].push_back({ti, 0});
      mt.prereqs[9].push_back({ti, last});
    }
    for (int e = 0; e < n_edges; ++e) mt.prereqs[5].push_back({edge_idx(e), 1});

    // internal wiring, then the complete-bipartite prerequisite edges
    for (int t = base; t < static_cast<int>(meta.towers.size()); ++t) {
      const Tower &tw = meta.towers[t];
      for (std::size_t i = 1; i < tw.levels.size(); ++i) {
        if (tw.wiring[i] == LevelWiring::Complete) {
          b.complete(tw.levels[i - 1], tw.levels[i]);
        } else {
          wire_levels(b, tw.levels[i - 1], tw.levels[i]);
        }
      }
      for (std::size_t i = 0; i < tw.levels.size(); ++i) {
        for (const LevelRef &p : tw.prereqs[i]) b.complete(meta.towers[p.tower].levels[p.level], tw.levels[i]);
      }
    }
    meta.copy_ranges.emplace_back(base, static_cast<int>(meta.towers.size()));
    carried = meta.towers[main_idx].levels.back().front();
    for (int t = base; t < static_cast<int>(meta.towers.size()); ++t) {
      const Tower &tw = meta.towers[t];
      for (std::size_t i = 0; i < tw.levels.size(); ++i) {
        a.groups[cp + tw.name + ":L" + std::to_string(i)] = tw.levels[i];
      }
    }
  }
  a.dag = b.build(true);
  a.towers = std::move(meta);
  a.prescribed = Prescribed{1, s.r, 1};
  a.expected["surplus_if_clique"] = Rational(0);
  return a;
}

ReductionArtifact gen_io_tradeoff_increase(int copies, std::int64_t g) {
  if (copies < 1 || g < 1) throw ParamError("io-tradeoff-increase needs copies >= 1 and g >= 1");
  ReductionArtifact a;
  DagBuilder b;
  a.family = "io-tradeoff-increase";
  a.params = {{"copies", copies}, {"g", g}};
  NodeId hub = b.add("hub0");
  a.groups["hub0"] = {hub};
  for (int c = 0; c < copies; ++c) {
    auto left = b.add_path(2 * g + 1);
    auto right = b.add_path(2 * g + 1);
    NodeId next = b.add("hub" + std::to_string(c + 1));
    b.edge(hub, left.front());
    b.edge(hub, right.front());
    b.edge(left.back(), next);
    b.edge(right.back(), next);
    a.groups["left" + std::to_string(c)] = left;
    a.groups["right" + std::to_string(c)] = right;
    a.groups["hub" + std::to_string(c + 1)] = {next};
    hub = next;
  }
  a.dag = b.build();
  a.prescribed = Prescribed{2, static_cast<std::int64_t>(a.dag.n()) + 1, g};
  a.expected["io_k1"] = Rational(0);
  a.expected["io_k2"] = Rational(2 * copies);
  return a;
}

ReductionArtifact gen_io_tradeoff_decrease(int m, int d, std::int64_t g) {
  if (m < 1 || d < 1 || g < 1) throw ParamError("io-tradeoff-decrease needs m, d, g >= 1");
  const std::int64_t period = d * (2 * g + 1) + 1;
  if (m % period != 0) {
    throw DivisibilityError("m=" + std::to_string(m) + " is not a multiple of d*(2g+1)+1=" + std::to_string(period));
  }
  ReductionArtifact a;
  DagBuilder b;
  a.family = "io-tradeoff-decrease";
  const int n0 = static_cast<int>(m / period);
  a.params = {{"m", m}, {"d", d}, {"g", g}, {"n0", n0}};
  a.groups["chain"] = b.add_path(m);
  ZipperParams p;
  p.d = d;
  p.n0 = n0;
  p.g = g;
  p.groups = 4;
  p.antirecompute = true;
  ZipperCore z = add_zipper(b, a, p, "", true);
  for (const auto &grp : z.groups)
    for (NodeId u : grp) add_arc(b, a, u, g);
  if (n0 < 4) a.notes.push_back("input groups feeding no chain node are omitted");
  a.dag = b.build();
  a.prescribed = Prescribed{2, d + 2, g};
  a.expected["total_k2"] = Rational(m);
  a.expected["io_k2"] = Rational(0);
  return a;
}

ReductionArtifact gen_fig1() {
  ReductionArtifact a;
  DagBuilder b;
  a.family = "fig1";
  auto leaf_pair = [&](const std::string &l1, const std::string &l2, const std::string &mid) {
    NodeId x = b.add(l1), y = b.add(l2), m = b.add(mid);
    b.edge(x, m);
    b.edge(y, m);
    return std::vector<NodeId>{x, y, m};
  };
  auto left_a = leaf_pair("v1", "v2", "v3");
  auto left_b = leaf_pair("", "", "v4");
  NodeId v5 = b.add("v5");
  b.edge(left_a[2], v5);
  b.edge(left_b[2], v5);
  auto right_a = leaf_pair("", "", "");
  auto right_b = leaf_pair("", "", "");
  NodeId v6 = b.add("v6");
  b.edge(right_a[2], v6);
  b.edge(right_b[2], v6);
  NodeId v7 = b.add("v7");
  b.edge(v5, v7);
  b.edge(v6, v7);
  a.groups = {{"left_a", left_a}, {"left_b", left_b}, {"right_a", right_a}, {"right_b", right_b},
              {"v5", {v5}},       {"v6", {v6}},       {"v7", {v7}}};
  a.dag = b.build();
  a.prescribed = Prescribed{1, 3, 1};
  a.expected["narrative_1p_compute"] = Rational(15);
  a.expected["narrative_1p_io"] = Rational(6);
  a.expected["narrative_2p_compute_steps"] = Rational(8);
  a.expected["narrative_2p_io_steps"] = Rational(4);
  a.notes.push_back("the drawn figure has 15 nodes: 8 leaves, 4 inner nodes, v5, v6, v7");
  return a;
}

ReductionArtifact gen_random_dag(const RandomDagParams &p) {
  if (p.n < 1) throw ParamError("random DAG needs n >= 1");
  if (p.max_in_degree < 0) throw ParamError("in-degree cap must be non-negative");
  ReductionArtifact a;
  a.family = "random";
  a.params = {{"n", p.n}, {"max_in_degree", p.max_in_degree}, {"seed", static_cast<std::int64_t>(p.seed)}};
  std::mt19937_64 rng(p.seed);
  std::bernoulli_distribution coin(p.edge_prob);
  std::vector<Edge> edges;
  for (int v = 1; v < p.n; ++v) {
    std::vector<NodeId> preds;
    for (int u = 0; u < v; ++u)
      if (coin(rng)) preds.push_back(static_cast<NodeId>(u));
    if (static_cast<int>(preds.size()) > p.max_in_degree) {
      std::shuffle(preds.begin(), preds.end(), rng);
      preds.resize(static_cast<std::size_t>(p.max_in_degree));
    }
    for (NodeId u : preds) edges.push_back({u, static_cast<NodeId>(v)});
  }
  a.dag = build_dag(static_cast<std::size_t>(p.n), std::move(edges));
  return a;
}

}  // namespace pebble
