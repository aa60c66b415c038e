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
#include <vector>

#include "pebble/artifact.hpp"
#include "pebble/machine.hpp"

namespace pebble {

// Baseline: one node at a time on processor 1, loading every
// in-neighbor, computing, saving, and clearing fast memory.
// Throws InfeasibleError if r <= max in-degree.
Strategy baseline_sequential(const ProblemInstance &instance, const CompDag &dag);

enum class GreedyScore { CountRedInNeighbors, FractionRedInNeighbors };
enum class SourceFraction { Zero, One };
enum class Eviction { LRU, FarthestNextUse };
enum class SavePolicy {
  OnEvict,                    // save a live value only when its last red copy is evicted
  WriteThroughIfNeededLater,  // save right after computing if an out-neighbor is still uncomputed
};

struct GreedyPolicy {
  GreedyScore score = GreedyScore::CountRedInNeighbors;
  SourceFraction source_fraction = SourceFraction::Zero;
  Eviction eviction = Eviction::FarthestNextUse;
  SavePolicy save_policy = SavePolicy::OnEvict;
  // 0: ties go to the smallest id. Otherwise ties follow a permutation drawn from this seed.
  std::uint64_t tie_seed = 0;
};

// Round-based list scheduler. Every processor picks a ready node, missing
// inputs are loaded from slow memory, and all picks are computed in one
// shared step. Never recomputes. Throws InfeasibleError, VariantError (no-delete).
Strategy greedy_schedule(const ProblemInstance &instance, const CompDag &dag, const GreedyPolicy &policy = {});

enum class WitnessKind {
  Zipper1p,
  Zipper2p,
  SkipChain,
  VcReduction,
  CliqueReduction,
  GreedyAdversarialA,
  GreedyAdversarialB,
  SubgroupCycle,
  Fig1_1p,
  Fig1_2p,
  IoTradeoffIncrease,
  IoTradeoffDecrease,
};

std::string to_string(WitnessKind kind);
WitnessKind parse_witness_kind(const std::string &s);
// Witness kinds whose generator family matches, in a fixed order.
std::vector<WitnessKind> witnesses_for_family(const std::string &family);

struct WitnessInput {
  std::vector<int> cover;   // vc-reduction
  std::vector<int> clique;  // clique-reduction
};

// Hand-built strategy for a generated construction.
// Throws MismatchError (wrong family or instance), WitnessUnavailableError.
Strategy witness_strategy(WitnessKind kind, const ReductionArtifact &artifact, const ProblemInstance &instance,
                          const WitnessInput &input = {});

// Appends rules while replaying them, so a bad step fails where it is written.
class StrategyBuilder {
 public:
  StrategyBuilder(const ProblemInstance &instance, const CompDag &dag);

  void push(const TransitionRule &rule);
  void compute(int shade, NodeId v) { push(TransitionRule::compute({{shade, v}})); }
  void save(int shade, NodeId v) { push(TransitionRule::save({{shade, v}})); }
  void load(int shade, NodeId v) { push(TransitionRule::load({{shade, v}})); }
  // Splits placements of one kind into as few steps as distinct shades allow, keeping order per shade.
  void push_batched(RuleKind kind, const std::vector<Placement> &entries);
  void drop(int shade, NodeId v);
  void drop(int shade, const std::vector<NodeId> &nodes);
  // Drops every red pebble of the shade except those listed.
  void drop_all_except(int shade, const std::vector<NodeId> &keep = {});

  // Computes path in order, dropping each element once its successor on the path is red.
  void compute_path(int shade, const std::vector<NodeId> &path);
  // Makes v red on shade: no-op, load, or save-by-holder then load.
  void bring(int shade, NodeId v);
  // Saves sinks lacking a blue pebble when the terminal mode asks for it.
  void finish();

  bool red(int shade, NodeId v) const { return state_.config.red[shade - 1].test(v); }
  bool blue(NodeId v) const { return state_.config.blue.test(v); }
  int holder(NodeId v) const;  // lowest shade with a red pebble on v, 0 if none
  std::vector<NodeId> red_nodes(int shade) const;
  const MachineState &state() const { return state_; }
  const ProblemInstance &instance() const { return instance_; }
  const Strategy &strategy() const { return strategy_; }
  Strategy take() { return std::move(strategy_); }

  // Lockstep merge of per-shade programs that do not depend on each other.
  struct Action {
    RuleKind kind = RuleKind::Compute;  // Compute, Save, Load or Delete (of a red pebble)
    NodeId node = 0;
  };
  using Program = std::vector<Action>;
  void run_parallel(const std::vector<std::pair<int, Program>> &programs);

 private:
  ProblemInstance instance_;
  const CompDag &dag_;
  MachineState state_;
  Strategy strategy_;
};

// Anti-recompute chain feeding v (head first) followed by v itself.
std::vector<NodeId> arc_path(const ReductionArtifact &artifact, NodeId v);

}  // namespace pebble
