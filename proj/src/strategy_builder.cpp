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
#include <algorithm>
#include <map>

#include "pebble/errors.hpp"
#include "pebble/strategies.hpp"

namespace pebble {

StrategyBuilder::StrategyBuilder(const ProblemInstance &instance, const CompDag &dag)
    : instance_(instance), dag_(dag), state_(initial_state(instance, dag)) {}

void StrategyBuilder::push(const TransitionRule &rule) {
  apply_rule(instance_, dag_, state_, rule);
  strategy_.steps.push_back(rule);
}

void StrategyBuilder::push_batched(RuleKind kind, const std::vector<Placement> &entries) {
  std::map<int, std::vector<NodeId>> per_shade;
  for (const Placement &p : entries) per_shade[p.shade].push_back(p.node);
  std::size_t rounds = 0;
  for (const auto &[shade, nodes] : per_shade) rounds = std::max(rounds, nodes.size());
  for (std::size_t i = 0; i < rounds; ++i) {
    TransitionRule rule;
    rule.kind = kind;
    for (const auto &[shade, nodes] : per_shade) {
      if (i < nodes.size()) rule.placements.push_back({shade, nodes[i]});
    }
    push(rule);
  }
}

void StrategyBuilder::drop(int shade, NodeId v) { push(TransitionRule::remove({{shade, v}})); }

void StrategyBuilder::drop(int shade, const std::vector<NodeId> &nodes) {
  std::vector<Removal> rm;
  for (NodeId v : nodes)
    if (red(shade, v)) rm.push_back({shade, v});
  if (!rm.empty()) push(TransitionRule::remove(std::move(rm)));
}

void StrategyBuilder::drop_all_except(int shade, const std::vector<NodeId> &keep) {
  std::vector<NodeId> victims;
  for (NodeId v : red_nodes(shade)) {
    if (std::find(keep.begin(), keep.end(), v) == keep.end()) victims.push_back(v);
  }
  drop(shade, victims);
}

void StrategyBuilder::compute_path(int shade, const std::vector<NodeId> &path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    compute(shade, path[i]);
    if (i > 0) drop(shade, path[i - 1]);
  }
}

void StrategyBuilder::bring(int shade, NodeId v) {
  if (red(shade, v)) return;
  if (!blue(v)) {
    int h = holder(v);
    if (h == 0) throw WitnessUnavailableError("node " + std::to_string(v) + " has no pebble to bring");
    save(h, v);
  }
  load(shade, v);
}

void StrategyBuilder::finish() {
  if (instance_.terminal != TerminalMode::BluePebbleOnSinks) return;
  std::vector<Placement> saves;
  for (NodeId s : dag_.sinks()) {
    if (blue(s)) continue;
    int h = holder(s);
    if (h == 0) throw WitnessUnavailableError("sink " + std::to_string(s) + " was never pebbled");
    saves.push_back({h, s});
  }
  push_batched(RuleKind::Save, saves);
}

int StrategyBuilder::holder(NodeId v) const {
  for (int j = 1; j <= instance_.k; ++j)
    if (red(j, v)) return j;
  return 0;
}

std::vector<NodeId> StrategyBuilder::red_nodes(int shade) const {
  std::vector<NodeId> out;
  const NodeSet &s = state_.config.red[shade - 1];
  for (auto i = s.find_first(); i != NodeSet::npos; i = s.find_next(i)) out.push_back(static_cast<NodeId>(i));
  return out;
}

void StrategyBuilder::run_parallel(const std::vector<std::pair<int, Program>> &programs) {
  std::vector<std::size_t> pos(programs.size(), 0);
  for (;;) {
    std::vector<Removal> rm;
    for (std::size_t i = 0; i < programs.size(); ++i) {
      const auto &[shade, prog] = programs[i];
      while (pos[i] < prog.size() && prog[pos[i]].kind == RuleKind::Delete) rm.push_back({shade, prog[pos[i]++].node});
    }
    if (!rm.empty()) push(TransitionRule::remove(std::move(rm)));

    int counts[3] = {0, 0, 0};  // compute, save, load
    auto slot = [](RuleKind k) { return k == RuleKind::Compute ? 0 : k == RuleKind::Save ? 1 : 2; };
    bool any = false;
    for (std::size_t i = 0; i < programs.size(); ++i) {
      if (pos[i] < programs[i].second.size()) {
        any = true;
        ++counts[slot(programs[i].second[pos[i]].kind)];
      }
    }
    if (!any) break;
    int best = 0;
    for (int s = 1; s < 3; ++s)
      if (counts[s] > counts[best]) best = s;
    const RuleKind kinds[3] = {RuleKind::Compute, RuleKind::Save, RuleKind::Load};
    TransitionRule rule;
    rule.kind = kinds[best];
    for (std::size_t i = 0; i < programs.size(); ++i) {
      const auto &[shade, prog] = programs[i];
      if (pos[i] < prog.size() && slot(prog[pos[i]].kind) == best) rule.placements.push_back({shade, prog[pos[i]++].node});
    }
    push(rule);
  }
}

std::vector<NodeId> arc_path(const ReductionArtifact &artifact, NodeId v) {
  std::vector<NodeId> path;
  auto it = artifact.groups.find("arc:" + std::to_string(v));
  if (it != artifact.groups.end()) path = it->second;
  path.push_back(v);
  return path;
}

}  // namespace pebble
