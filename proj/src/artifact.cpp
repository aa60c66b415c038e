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
#include "pebble/artifact.hpp"

#include <json.hpp>

#include "pebble/errors.hpp"

namespace pebble {

std::int64_t TowerMetadata::transition_peak(int t, int i, bool keep_previous) const {
  const Tower &tw = towers[t];
  std::int64_t next = tw.level_size(i);
  if (i == 0) return next;
  std::int64_t cur = tw.level_size(i - 1);
  if (keep_previous || tw.wiring[i] == LevelWiring::Complete) return cur + next;
  return std::max(cur + 1, next);
}

const std::vector<NodeId> &ReductionArtifact::group(const std::string &name) const {
  auto it = groups.find(name);
  if (it == groups.end()) throw MetadataError("artifact of family '" + family + "' has no group '" + name + "'");
  return it->second;
}

std::int64_t ReductionArtifact::param(const std::string &name) const {
  auto it = params.find(name);
  if (it == params.end()) throw MetadataError("artifact of family '" + family + "' has no parameter '" + name + "'");
  return it->second;
}

ProblemInstance prescribed_instance(const ReductionArtifact &a) {
  if (!a.prescribed) throw MetadataError("artifact of family '" + a.family + "' prescribes no instance");
  ProblemInstance inst;
  inst.k = a.prescribed->k;
  inst.r = a.prescribed->r;
  inst.g = a.prescribed->g;
  return inst;
}

std::string artifact_metadata_json(const ReductionArtifact &a) {
  nlohmann::ordered_json j;
  j["family"] = a.family;
  j["n"] = a.dag.n();
  j["m"] = a.dag.m();
  j["params"] = a.params;
  if (a.prescribed) {
    j["prescribed"] = {{"k", a.prescribed->k}, {"r", a.prescribed->r}, {"g", a.prescribed->g}};
  }
  nlohmann::ordered_json expected = nlohmann::ordered_json::object();
  for (const auto &[key, q] : a.expected) expected[key] = to_string(q);
  j["expected"] = expected;
  j["groups"] = a.groups;
  j["tables"] = a.tables;
  j["notes"] = a.notes;
  if (a.towers) {
    nlohmann::ordered_json towers = nlohmann::ordered_json::array();
    for (const Tower &t : a.towers->towers) {
      nlohmann::ordered_json tj;
      tj["name"] = t.name;
      tj["copy"] = t.copy;
      tj["starts_pebbled"] = t.starts_pebbled;
      nlohmann::ordered_json levels = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < t.levels.size(); ++i) {
        nlohmann::ordered_json lj;
        lj["size"] = t.levels[i].size();
        lj["wiring"] = t.wiring[i] == LevelWiring::Complete ? "complete" : "gadget";
        nlohmann::ordered_json pre = nlohmann::ordered_json::array();
        for (const LevelRef &p : t.prereqs[i]) pre.push_back({p.tower, p.level});
        lj["prereqs"] = pre;
        lj["nodes"] = t.levels[i];
        levels.push_back(lj);
      }
      tj["levels"] = levels;
      towers.push_back(tj);
    }
    j["towers"] = towers;
  }
  return j.dump(2) + "\n";
}

void check_artifact_consistency(const ReductionArtifact &a) {
  const std::size_t n = a.dag.n();
  for (const auto &[name, nodes] : a.groups) {
    for (NodeId v : nodes) {
      if (v >= n) throw MetadataError("group '" + name + "' references missing node " + std::to_string(v));
    }
  }
  if (!a.towers) return;
  std::vector<int> owner(n, -1);
  const auto &towers = a.towers->towers;
  for (std::size_t t = 0; t < towers.size(); ++t) {
    const Tower &tw = towers[t];
    if (tw.levels.empty()) throw MetadataError("tower '" + tw.name + "' has no levels");
    if (tw.wiring.size() != tw.levels.size() || tw.prereqs.size() != tw.levels.size()) {
      throw MetadataError("tower '" + tw.name + "' has inconsistent level tables");
    }
    for (std::size_t i = 0; i < tw.levels.size(); ++i) {
      if (tw.levels[i].empty()) throw MetadataError("tower '" + tw.name + "' has an empty level");
      // level 0 of a later copy's main tower is the previous copy's sink
      bool shared = i == 0 && tw.starts_pebbled;
      for (NodeId v : tw.levels[i]) {
        if (v >= n) throw MetadataError("tower '" + tw.name + "' references missing node");
        if (shared) continue;
        if (owner[v] != -1) throw MetadataError("node " + std::to_string(v) + " belongs to two tower levels");
        owner[v] = static_cast<int>(t);
      }
      for (const LevelRef &p : tw.prereqs[i]) {
        if (p.tower < 0 || p.tower >= static_cast<int>(towers.size()) || p.level < 0 ||
            p.level >= static_cast<int>(towers[p.tower].levels.size())) {
          throw MetadataError("tower '" + tw.name + "' has a dangling prerequisite");
        }
      }
    }
  }
}

}  // namespace pebble
