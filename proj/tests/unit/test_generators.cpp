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
#include <doctest.h>

#include <algorithm>
#include <set>

#include "pebble/errors.hpp"
#include "pebble/generators.hpp"
#include "pebble/oracles.hpp"
#include "pebble/solver.hpp"

using namespace pebble;

TEST_CASE("chains") {
  CHECK(gen_chain(1).dag.n() == 1);
  CompDag c = gen_independent_chains(2, 5).dag;
  CHECK(c.n() == 10);
  CHECK(c.sources().size() == 2);
  CHECK(c.sinks().size() == 2);
  ReductionArtifact a = gen_independent_chains(2, 4);
  OptResult r = exact_opt({2, 2, 1}, a.dag);
  REQUIRE(r.status == OptStatus::Optimal);
  CHECK(r.opt_total == 4);
}

TEST_CASE("zipper shape") {
  ZipperParams p;
  p.d = 2;
  p.n0 = 3;
  ReductionArtifact a = gen_zipper(p);
  CHECK(a.dag.n() == 7);
  CHECK(a.dag.max_in_degree() == 3);
  for (NodeId v : a.group("main")) {
    if (v != a.group("main").front()) CHECK(a.dag.in_degree(v) == 3);
  }
  p.d = 3;
  p.n0 = 6;
  CHECK(gen_zipper(p).dag.n() == 12);
  p.antirecompute = true;
  p.g = 2;
  CHECK(gen_zipper(p).dag.n() == 12 + 6 * 4);
  check_artifact_consistency(gen_zipper(p));
}

TEST_CASE("zipper subgroup mode for two processors") {
  ZipperParams p;
  p.d = 4;
  p.n0 = 8;
  p.subgroup_k = 2;
  ReductionArtifact a = gen_zipper(p);
  const auto &main = a.group("main");
  std::vector<std::set<NodeId>> inputs;
  for (std::size_t t = 0; t < main.size(); ++t) {
    std::set<NodeId> in;
    for (NodeId u : a.dag.preds(main[t]))
      if (t == 0 || u != main[t - 1]) in.insert(u);
    CHECK(static_cast<int>(in.size()) == p.d);
    inputs.push_back(in);
  }
  for (std::size_t s = 0; s < 4; ++s) {
    for (std::size_t t = s + 1; t < 4; ++t) {
      std::vector<NodeId> common;
      std::set_intersection(inputs[s].begin(), inputs[s].end(), inputs[t].begin(), inputs[t].end(),
                            std::back_inserter(common));
      CHECK(static_cast<int>(common.size()) <= p.d / 2);
    }
  }
}

TEST_CASE("subgroup cycle for three processors") {
  ReductionArtifact a = gen_subgroup_cycle(3, 3, 9);
  // first indices of S(i,l) for l = 1..3 in cycle order
  const std::vector<std::vector<int>> expected = {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {1, 2, 3}, {2, 3, 1},
                                                  {3, 1, 2}, {1, 3, 2}, {2, 1, 3}, {3, 2, 1}};
  for (int t = 0; t < 9; ++t) {
    const auto &tuple = a.tables.at("tuple:" + std::to_string(t));
    std::vector<int> first;
    for (std::size_t l = 0; l < tuple.size(); ++l) {
      CHECK(tuple[l] % 3 == static_cast<std::int64_t>(l));
      first.push_back(static_cast<int>(tuple[l] / 3) + 1);
    }
    CHECK(first == expected[t]);
  }
  for (int s = 0; s < 9; ++s) {
    for (int t = s + 1; t < 9; ++t) {
      const auto &x = a.tables.at("tuple:" + std::to_string(s));
      const auto &y = a.tables.at("tuple:" + std::to_string(t));
      int shared = 0;
      for (auto v : x) shared += static_cast<int>(std::count(y.begin(), y.end(), v));
      CHECK(shared <= 1);
      if (s / 3 == t / 3) CHECK(shared == 0);
    }
  }
  CHECK_THROWS_AS(gen_subgroup_cycle(4, 4, 4), ParamError);
}

TEST_CASE("skip chain") {
  CompDag d = gen_skip_chain(2, 1).dag;
  CHECK(d.n() == 4);
  CHECK(d.m() == 5);
  CHECK(gen_skip_chain(3, 2).dag.n() == 12);
}

TEST_CASE("greedy adversarial constructions") {
  ReductionArtifact b = gen_greedy_adversarial_b(2);
  CHECK(b.dag.n() == 12);
  NodeId w1 = b.group("w")[0];
  std::vector<NodeId> preds(b.dag.preds(w1).begin(), b.dag.preds(w1).end());
  CHECK(std::count(preds.begin(), preds.end(), b.group("u")[0]) == 1);
  CHECK(std::count(preds.begin(), preds.end(), b.group("v")[2]) == 1);
  ReductionArtifact a = gen_greedy_adversarial_a(3, 2, 6);
  check_artifact_consistency(a);
  CHECK(a.dag.sources().size() == 2);
}

TEST_CASE("vertex cover reduction counts") {
  ReductionArtifact a = gen_vc_reduction(complete_graph(4), 4, 4, 2);
  CHECK(a.dag.n() == 300);
  CHECK(a.expected.at("n_formula") == Rational(300));
  for (int v = 0; v < 4; ++v) CHECK(a.dag.in_degree(a.group("target:" + std::to_string(v)).back()) == 4 + 4 + 1);
  check_artifact_consistency(a);
}

TEST_CASE("clique reduction parameters") {
  CliqueLevelSizes s = clique_level_sizes(3, 3, 3);
  CHECK(s.r == 162);
  CHECK(s.c1 == 54);
  CHECK(s.b1 == 108);
  ReductionArtifact a = gen_clique_reduction(complete_graph(3), 3, 1);
  CHECK(prescribed_instance(a).r == 162);
  REQUIRE(a.towers);
  check_artifact_consistency(a);
  // every tower's levels partition its nodes, no node in two towers
  std::set<NodeId> seen;
  for (const Tower &t : a.towers->towers) {
    for (const auto &level : t.levels) {
      for (NodeId v : level) {
        if (t.starts_pebbled && &level == &t.levels.front()) continue;
        CHECK(seen.insert(v).second);
      }
    }
  }
}

TEST_CASE("level gadget wiring") {
  ReductionArtifact grow = gen_level_tower({5, 5});
  const auto &low = grow.towers->towers[0].levels[0];
  const auto &high = grow.towers->towers[0].levels[1];
  for (int i = 0; i + 1 < 5; ++i) {
    CHECK(grow.dag.has_edge(low[i], low[i + 1]));
    CHECK(grow.dag.has_edge(high[i], high[i + 1]));
  }
  for (int i = 0; i < 5; ++i) CHECK(grow.dag.has_edge(low[i], high[i]));
  CHECK(grow.dag.has_edge(low[4], high[0]));
  ReductionArtifact shrink = gen_level_tower({5, 3});
  const auto &a = shrink.towers->towers[0].levels[0];
  const auto &b = shrink.towers->towers[0].levels[1];
  for (int i = 3; i < 5; ++i) CHECK(shrink.dag.has_edge(a[i], b[2]));
}

TEST_CASE("io trade-off constructions") {
  CHECK(gen_io_tradeoff_increase(1, 1).dag.n() == 8);
  ReductionArtifact dec = gen_io_tradeoff_decrease(14, 2, 1);
  CHECK(dec.expected.at("total_k2") == Rational(14));
  CHECK_THROWS_AS(gen_io_tradeoff_decrease(15, 2, 1), DivisibilityError);
}

TEST_CASE("fig1 shape") {
  ReductionArtifact a = gen_fig1();
  CHECK(a.dag.n() == 15);
  CHECK(a.dag.max_in_degree() == 2);
  CHECK(a.dag.sources().size() == 8);
  CHECK(a.dag.sinks().size() == 1);
}

TEST_CASE("random DAGs") {
  RandomDagParams p;
  p.n = 1;
  CHECK(gen_random_dag(p).dag.n() == 1);
  p.n = 30;
  p.edge_prob = 0.6;
  p.max_in_degree = 3;
  p.seed = 5;
  CHECK(gen_random_dag(p).dag.edges() == gen_random_dag(p).dag.edges());
  for (std::uint64_t s = 0; s < 1000; ++s) {
    p.seed = s;
    p.n = 12;
    CHECK(gen_random_dag(p).dag.max_in_degree() <= 3);
  }
}
