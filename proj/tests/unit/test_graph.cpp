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

#include "pebble/errors.hpp"
#include "pebble/graph.hpp"
#include "pebble/oracles.hpp"

using namespace pebble;

TEST_CASE("graph construction and text format") {
  Graph k4 = complete_graph(4);
  CHECK(k4.m() == 6);
  CHECK(k4.is_cubic());
  CHECK(parse_graph(serialize_graph(k4)).edges == k4.edges);
  CHECK_THROWS_AS(build_graph(2, {{0, 0}}), ParamError);
  CHECK_THROWS_AS(build_graph(2, {{0, 1}, {1, 0}}), DuplicateEdgeError);
  CHECK_THROWS_AS(build_graph(2, {{0, 2}}), RangeError);
  CHECK_THROWS_AS(parse_graph("graph 2 2\ne 0 1\n"), ParseError);
}

TEST_CASE("vertex cover brute force") {
  CHECK(vc_bruteforce(complete_graph(4)).size == 3);
  CHECK(vc_bruteforce(build_graph(2, {{0, 1}})).size == 1);
  CHECK(vc_bruteforce(cycle_graph(5)).size == 3);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = random_graph(10, 0.4, seed);
    CoverResult a = vc_bruteforce(g), b = vc_bruteforce_serial(g);
    CHECK(a.size == b.size);
    CHECK(a.cover == b.cover);
    for (auto [u, v] : g.edges) {
      bool covered = std::find(a.cover.begin(), a.cover.end(), u) != a.cover.end() ||
                     std::find(a.cover.begin(), a.cover.end(), v) != a.cover.end();
      CHECK(covered);
    }
    if (g.is_cubic()) CHECK(2 * a.size >= g.n);
  }
}

TEST_CASE("clique brute force") {
  CHECK(clique_bruteforce(complete_graph(4), 4).exists);
  CHECK_FALSE(clique_bruteforce(cycle_graph(5), 3).exists);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = random_graph(8, 0.5, seed);
    int triangles = 0;
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        for (int c = b + 1; c < 8; ++c)
          if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) ++triangles;
    CliqueResult r = clique_bruteforce(g, 3);
    CHECK(r.exists == (triangles > 0));
    CHECK(r.clique == clique_bruteforce_serial(g, 3).clique);
  }
}
