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
#include "pebble/oracles.hpp"

#include <bit>
#include <limits>

#include "pebble/errors.hpp"

namespace pebble {

namespace {

constexpr int kMaxOracleNodes = 24;

void check_size(const Graph &g) {
  if (g.n > kMaxOracleNodes) throw RangeError("brute-force oracles are limited to 24 nodes");
}

std::vector<int> mask_to_list(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

bool covers(const Graph &g, std::uint64_t mask) {
  for (auto [u, v] : g.edges) {
    if (!((mask >> u) & 1) && !((mask >> v) & 1)) return false;
  }
  return true;
}

bool is_clique(const std::vector<std::uint64_t> &adj, std::uint64_t mask) {
  for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    if ((adj[v] | (std::uint64_t{1} << v)) != (adj[v] | mask)) return false;
  }
  return true;
}

// (popcount, mask) order
bool better_cover(std::uint64_t a, std::uint64_t b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

CoverResult vc_bruteforce_serial(const Graph &g) {
  check_size(g);
  std::uint64_t limit = std::uint64_t{1} << g.n;
  std::uint64_t best = limit - 1;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (better_cover(mask, best) && covers(g, mask)) best = mask;
  }
  return {std::popcount(best), mask_to_list(best)};
}

CoverResult vc_bruteforce(const Graph &g) {
  check_size(g);
  const std::int64_t limit = std::int64_t{1} << g.n;
  std::uint64_t best = static_cast<std::uint64_t>(limit - 1);
#pragma omp parallel
  {
    std::uint64_t local = static_cast<std::uint64_t>(limit - 1);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < limit; ++i) {
      auto mask = static_cast<std::uint64_t>(i);
      if (better_cover(mask, local) && covers(g, mask)) local = mask;
    }
#pragma omp critical
    {
      if (better_cover(local, best)) best = local;
    }
  }
  return {std::popcount(best), mask_to_list(best)};
}

CliqueResult clique_bruteforce_serial(const Graph &g, int q) {
  check_size(g);
  if (q <= 0) return {true, {}};
  if (q > g.n) return {};
  auto adj = g.adjacency_masks();
  std::uint64_t limit = std::uint64_t{1} << g.n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) == q && is_clique(adj, mask)) return {true, mask_to_list(mask)};
  }
  return {};
}

CliqueResult clique_bruteforce(const Graph &g, int q) {
  check_size(g);
  if (q <= 0) return {true, {}};
  if (q > g.n) return {};
  auto adj = g.adjacency_masks();
  const std::int64_t limit = std::int64_t{1} << g.n;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t i = 0; i < limit; ++i) {
    auto mask = static_cast<std::uint64_t>(i);
    if (mask < best && std::popcount(mask) == q && is_clique(adj, mask)) best = mask;
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return {};
  return {true, mask_to_list(best)};
}

}  // namespace pebble
