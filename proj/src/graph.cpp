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
#include "pebble/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "pebble/errors.hpp"

namespace pebble {

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

std::vector<std::vector<int>> Graph::neighbors() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto &a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n > 64) throw RangeError("adjacency masks need n <= 64");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

bool Graph::is_cubic() const {
  auto d = degrees();
  return n > 0 && std::all_of(d.begin(), d.end(), [](int x) { return x == 3; });
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw RangeError("negative node count");
  for (auto &[u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw RangeError("graph edge endpoint out of range");
    if (u == v) throw ParamError("self-loop in undirected graph");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw DuplicateEdgeError("duplicate undirected edge");
  }
  return Graph{n, std::move(edges)};
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return build_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return build_graph(n, std::move(e));
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return build_graph(n, std::move(e));
}

std::string serialize_graph(const Graph &g) {
  std::ostringstream os;
  os << "graph " << g.n << " " << g.m() << "\n";
  for (auto [u, v] : g.edges) os << "e " << u << " " << v << "\n";
  return os.str();
}

Graph parse_graph(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  long n = 0, m = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::string extra;
    if (kw == "graph") {
      if (header || !(ls >> n >> m) || (ls >> extra) || n < 0 || m < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed graph header");
      }
      header = true;
    } else if (kw == "e" && header) {
      long u = 0, v = 0;
      if (!(ls >> u >> v) || (ls >> extra)) throw ParseError("line " + std::to_string(line_no) + ": malformed edge");
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unexpected record '" + kw + "'");
    }
  }
  if (!header) throw ParseError("missing 'graph' header");
  if (static_cast<long>(edges.size()) != m) throw ParseError("edge count does not match header");
  return build_graph(static_cast<int>(n), std::move(edges));
}

}  // namespace pebble
