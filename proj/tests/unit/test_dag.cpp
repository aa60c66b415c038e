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

#include "pebble/dag.hpp"
#include "pebble/errors.hpp"
#include "pebble/generators.hpp"

using namespace pebble;

TEST_CASE("single node is both source and sink") {
  CompDag d = build_dag(1, {});
  CHECK(d.n() == 1);
  CHECK(d.max_in_degree() == 0);
  CHECK(d.sources() == std::vector<NodeId>{0});
  CHECK(d.sinks() == std::vector<NodeId>{0});
}

TEST_CASE("join of two sources") {
  CompDag d = build_dag(3, {{0, 2}, {1, 2}});
  CHECK(d.max_in_degree() == 2);
  CHECK(d.sources() == std::vector<NodeId>{0, 1});
  CHECK(d.sinks() == std::vector<NodeId>{2});
  CHECK(d.has_edge(0, 2));
  CHECK_FALSE(d.has_edge(2, 0));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(build_dag(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
  CHECK_THROWS_AS(build_dag(2, {{0, 2}}), RangeError);
  CHECK_THROWS_AS(build_dag(2, {{0, 1}, {0, 1}}), DuplicateEdgeError);
  CHECK_THROWS_AS(build_dag(2, {{1, 1}}), CycleError);
}

TEST_CASE("topological order respects edges and prefers small ids") {
  CompDag d = build_dag(4, {{3, 0}, {2, 1}});
  CHECK(d.topo_order() == std::vector<NodeId>{2, 1, 3, 0});
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomDagParams p;
    p.n = 25;
    p.seed = seed;
    CompDag r = gen_random_dag(p).dag;
    for (const Edge &e : r.edges()) CHECK(r.topo_position()[e.from] < r.topo_position()[e.to]);
    CHECK(r.stats().longest_path < r.n());
  }
}

TEST_CASE("anti-recompute chains") {
  SUBCASE("single node, g=2") {
    CompDag d = build_dag(1, {});
    std::vector<NodeId> t{0};
    ChainedDag c = attach_antirecompute_chains(d, 2, t);
    CHECK(c.dag.n() == 5);
    REQUIRE(c.chains.size() == 1);
    CHECK(c.chains[0].size() == 4);
    CHECK(c.dag.has_edge(c.chains[0].back(), 0));
    CHECK(c.dag.sources() == std::vector<NodeId>{c.chains[0].front()});
  }
  SUBCASE("zipper inputs gain 2g nodes each") {
    ZipperParams p;
    p.d = 2;
    p.n0 = 3;
    CompDag z = gen_zipper(p).dag;
    ChainedDag c = attach_antirecompute_chains(z, 1, z.sources());
    CHECK(c.dag.n() == z.n() + 8);
    for (const Edge &e : z.edges()) CHECK(c.dag.has_edge(e.from, e.to));
  }
  SUBCASE("empty target set") {
    CompDag d = build_dag(3, {{0, 1}, {1, 2}});
    ChainedDag c = attach_antirecompute_chains(d, 3, {});
    CHECK(c.dag.structurally_equal(d));
  }
  SUBCASE("targets must be sources") {
    CompDag d = build_dag(2, {{0, 1}});
    std::vector<NodeId> t{1};
    CHECK_THROWS_AS(attach_antirecompute_chains(d, 1, t), NotASourceError);
  }
}

TEST_CASE("dot export") {
  std::string one = export_dot(build_dag(1, {}));
  CHECK(one.find("  0;") != std::string::npos);
  CHECK(one.find("->") == std::string::npos);
  std::string join = export_dot(build_dag(3, {{0, 2}, {1, 2}}));
  auto a = join.find("0 -> 2");
  auto b = join.find("1 -> 2");
  REQUIRE(a != std::string::npos);
  REQUIRE(b != std::string::npos);
  CHECK(a < b);
}

TEST_CASE("text round trip on random DAGs") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    RandomDagParams p;
    p.n = 1 + static_cast<int>(seed % 30);
    p.edge_prob = 0.25;
    p.seed = seed;
    CompDag d = gen_random_dag(p).dag;
    CompDag back = parse_dag(serialize_dag(d));
    CHECK(back.structurally_equal(d));
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_dag("e 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_dag("dag 2 2\ne 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_dag("dag 2 1\ne 0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_dag("dag 2 1\nedge 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_dag("dag 2 1\ne 0 5\n"), RangeError);
  CompDag d = parse_dag("# comment\ndag 2 1\ne 0 1\nlabel 1 top node\n");
  CHECK(d.label(1) == "top node");
}
