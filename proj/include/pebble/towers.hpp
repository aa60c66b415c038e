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
#include <optional>
#include <string>
#include <vector>

#include "pebble/artifact.hpp"
#include "pebble/machine.hpp"

namespace pebble {

// Search over whole-level states of towered DAGs. A tower sits on one level
// at a time (or two, right after an advance that keeps the old one).
struct TowerMove {
  enum class Kind {
    Advance,      // pebble the next level, drop the current one
    AdvanceKeep,  // pebble the next level, keep the current one for now
    DropKept,     // drop the kept level
    Release,      // drop the last level once nothing depends on it
    Spill,        // move one node of the current level to slow memory
    Unspill,      // bring one spilled node back
  };
  Kind kind = Kind::Advance;
  int tower = 0;
  bool operator==(const TowerMove &) const = default;
};

std::string to_string(const TowerMove &m);

enum class TowerStatus { Feasible, Infeasible, Exhausted };
std::string to_string(TowerStatus s);

struct TowerSearchOptions {
  bool allow_keep = false;
  std::size_t max_states = 5'000'000;  // per copy
};

struct TowerSearchResult {
  TowerStatus status = TowerStatus::Infeasible;
  std::vector<TowerMove> progression;
  std::size_t states = 0;
  std::int64_t io_cost = 0;  // spill search only
};

// Zero-I/O feasibility. Throws MetadataError when the artifact has no towers.
TowerSearchResult tower_abstract_opt(const ReductionArtifact &artifact, std::int64_t r,
                                     const TowerSearchOptions &options = {});

// Cheapest progression when up to max_spill_ops single-node spills are allowed
// per copy; each spill and each reload costs g.
TowerSearchResult tower_min_spill_search(const ReductionArtifact &artifact, std::int64_t r, std::int64_t g,
                                         int max_spill_ops, const TowerSearchOptions &options = {});

// Replays moves on the abstract state. Returns the first problem, or nullopt
// when every move is legal and all towers finish.
std::optional<std::string> check_progression(const ReductionArtifact &artifact, std::int64_t r,
                                             const std::vector<TowerMove> &moves);

// Intended zero-I/O progression for a clique-reduction artifact given a q-clique.
// Throws WitnessUnavailableError if the nodes do not form a clique of size q.
std::vector<TowerMove> clique_witness_progression(const ReductionArtifact &artifact, const std::vector<int> &clique);

// Turns a progression into concrete single-processor rules.
Strategy progression_to_strategy(const ReductionArtifact &artifact, const ProblemInstance &instance,
                                 const std::vector<TowerMove> &moves);

}  // namespace pebble
