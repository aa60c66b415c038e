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
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pebble {

// Simple undirected graph used as reduction input. Edges stored with u < v, sorted.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int m() const { return static_cast<int>(edges.size()); }
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> neighbors() const;
  // bit i of adjacency_masks()[v] set iff {v, i} is an edge; requires n <= 64
  std::vector<std::uint64_t> adjacency_masks() const;
  bool has_edge(int u, int v) const;
  bool is_cubic() const;
};

// Throws RangeError on bad endpoints, DuplicateEdgeError on repeats, ParamError on loops.
Graph build_graph(int n, std::vector<std::pair<int, int>> edges);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph random_graph(int n, double edge_prob, std::uint64_t seed);

// "graph <N> <M>" then M lines "e u v"; '#' comments.
std::string serialize_graph(const Graph &g);
Graph parse_graph(const std::string &text);

}  // namespace pebble
