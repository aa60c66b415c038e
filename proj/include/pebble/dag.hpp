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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pebble {

using NodeId = std::uint32_t;

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  auto operator<=>(const Edge &) const = default;
};

struct DagStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_in_degree = 0;
  std::size_t max_out_degree = 0;
  std::size_t source_count = 0;
  std::size_t sink_count = 0;
  std::size_t longest_path = 0;  // in edges
};

// Immutable after construction. Node ids are dense, 0..n-1.
class CompDag {
 public:
  CompDag() = default;

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }

  std::span<const NodeId> preds(NodeId v) const;
  std::span<const NodeId> succs(NodeId v) const;
  std::size_t in_degree(NodeId v) const { return pred_off_[v + 1] - pred_off_[v]; }
  std::size_t out_degree(NodeId v) const { return succ_off_[v + 1] - succ_off_[v]; }
  std::size_t max_in_degree() const { return max_in_; }

  const std::vector<NodeId> &sources() const { return sources_; }
  const std::vector<NodeId> &sinks() const { return sinks_; }
  bool is_sink(NodeId v) const { return out_degree(v) == 0; }
  bool is_source(NodeId v) const { return in_degree(v) == 0; }

  // Smallest-id-first among ready nodes.
  const std::vector<NodeId> &topo_order() const { return topo_; }
  // topo_position()[v] = index of v in topo_order().
  const std::vector<std::size_t> &topo_position() const { return topo_pos_; }

  // Sorted lexicographically.
  const std::vector<Edge> &edges() const { return edges_; }
  bool has_edge(NodeId u, NodeId v) const;

  const std::string &label(NodeId v) const;
  const std::vector<std::string> &labels() const { return labels_; }

  DagStats stats() const;

  // Same node count and edge set. Labels are ignored.
  bool structurally_equal(const CompDag &other) const;

 private:
  friend CompDag build_dag(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels);

  std::size_t n_ = 0;
  std::size_t max_in_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> pred_off_{0};
  std::vector<NodeId> pred_;
  std::vector<std::size_t> succ_off_{0};
  std::vector<NodeId> succ_;
  std::vector<NodeId> sources_;
  std::vector<NodeId> sinks_;
  std::vector<NodeId> topo_;
  std::vector<std::size_t> topo_pos_;
  std::vector<std::string> labels_;
};

// Throws RangeError, DuplicateEdgeError, CycleError.
CompDag build_dag(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

struct ChainedDag {
  CompDag dag;
  // Original ids are kept; chain nodes are appended after them.
  std::vector<NodeId> original_to_new;
  // chains[i] lists the chain feeding targets[i], head first.
  std::vector<NodeId> targets;
  std::vector<std::vector<NodeId>> chains;
};

// Prepends a fresh chain of 2*g nodes to every target. Targets must be sources.
ChainedDag attach_antirecompute_chains(const CompDag &dag, std::int64_t g,
                                       std::span<const NodeId> targets);

std::string export_dot(const CompDag &dag);

// Text format: "dag <n> <m>", "e <u> <v>", "label <v> <text>", '#' comments.
std::string serialize_dag(const CompDag &dag);
CompDag parse_dag(const std::string &text);

}  // namespace pebble
