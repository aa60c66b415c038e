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

#include "pebble/artifact.hpp"
#include "pebble/graph.hpp"

namespace pebble {

ReductionArtifact gen_chain(int len);
ReductionArtifact gen_independent_chains(int count, int len);

struct ZipperParams {
  int d = 2;
  int n0 = 3;
  bool antirecompute = false;
  std::int64_t g = 1;
  int groups = 2;
  // Group feeding the first chain node (0-based).
  int first_group = 0;
  // When > 0, build the k*k subgroup cycle with this k instead.
  int subgroup_k = 0;
};

ReductionArtifact gen_zipper(const ZipperParams &p);
ReductionArtifact gen_subgroup_cycle(int k, int d, int n0);
ReductionArtifact gen_skip_chain(int m, int copies);
ReductionArtifact gen_greedy_adversarial_a(int d, std::int64_t g, int n0);
ReductionArtifact gen_greedy_adversarial_b(int m, std::int64_t g = 1);
ReductionArtifact gen_vc_reduction(const Graph &graph, int b0, int b1, std::int64_t g);
ReductionArtifact gen_clique_reduction(const Graph &graph, int q, int copies);
ReductionArtifact gen_io_tradeoff_increase(int copies, std::int64_t g = 1);
ReductionArtifact gen_io_tradeoff_decrease(int m, int d, std::int64_t g);
ReductionArtifact gen_fig1();

struct RandomDagParams {
  int n = 10;
  double edge_prob = 0.3;
  int max_in_degree = 3;
  std::uint64_t seed = 1;
};
ReductionArtifact gen_random_dag(const RandomDagParams &p);

// One tower with gadget wiring between consecutive levels of the given sizes.
ReductionArtifact gen_level_tower(const std::vector<std::int64_t> &sizes);

// Clique-reduction level sizes for copy-independent inspection.
struct CliqueLevelSizes {
  std::int64_t a = 7, b1 = 0, b2 = 9, c1 = 0, c2 = 3, r = 0;
  std::vector<std::int64_t> main;  // the nine main-tower levels
};
CliqueLevelSizes clique_level_sizes(int n_nodes, int n_edges, int q);

}  // namespace pebble
