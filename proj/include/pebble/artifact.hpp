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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pebble/dag.hpp"
#include "pebble/graph.hpp"
#include "pebble/machine.hpp"

namespace pebble {

struct LevelRef {
  int tower = 0;
  int level = 0;
  bool operator==(const LevelRef &) const = default;
};

enum class LevelWiring {
  Gadget,    // chain + pairwise + fan-in wiring between consecutive levels
  Complete,  // every node of the next level depends on every node of this one
};

struct Tower {
  std::string name;
  int copy = 0;
  std::vector<std::vector<NodeId>> levels;
  // wiring[i] describes the edges from level i-1 into level i; wiring[0] is unused.
  std::vector<LevelWiring> wiring;
  // prereqs[i]: levels of other towers feeding level i (complete bipartite).
  std::vector<std::vector<LevelRef>> prereqs;
  // Level 0 is already pebbled when the copy starts (shared with the previous copy).
  bool starts_pebbled = false;

  std::int64_t level_size(int i) const { return static_cast<std::int64_t>(levels[i].size()); }
};

struct TowerMetadata {
  std::vector<Tower> towers;
  int copies = 1;
  // Per-copy tower index ranges [first, last).
  std::vector<std::pair<int, int>> copy_ranges;
  // Red pebbles needed while entering level i of tower t.
  std::int64_t transition_peak(int t, int i, bool keep_previous = false) const;
};

struct Prescribed {
  int k = 1;
  std::int64_t r = 1;
  std::int64_t g = 1;
};

struct ReductionArtifact {
  CompDag dag;
  std::string family;
  std::map<std::string, std::int64_t> params;
  std::map<std::string, std::vector<NodeId>> groups;
  std::map<std::string, std::vector<std::int64_t>> tables;
  std::map<std::string, Rational> expected;
  std::vector<std::string> notes;
  std::optional<Prescribed> prescribed;
  std::optional<TowerMetadata> towers;
  std::optional<Graph> input_graph;

  // Throws MetadataError when the group is absent.
  const std::vector<NodeId> &group(const std::string &name) const;
  bool has_group(const std::string &name) const { return groups.count(name) > 0; }
  std::int64_t param(const std::string &name) const;
};

ProblemInstance prescribed_instance(const ReductionArtifact &a);

// Metadata file (JSON): family, params, groups, tables, expected, towers.
std::string artifact_metadata_json(const ReductionArtifact &a);

// Throws MetadataError on dangling node references or malformed towers.
void check_artifact_consistency(const ReductionArtifact &a);

}  // namespace pebble
