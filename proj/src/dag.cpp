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
#include "pebble/dag.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "pebble/errors.hpp"

namespace pebble {

std::span<const NodeId> CompDag::preds(NodeId v) const {
  return {pred_.data() + pred_off_[v], pred_off_[v + 1] - pred_off_[v]};
}

std::span<const NodeId> CompDag::succs(NodeId v) const {
  return {succ_.data() + succ_off_[v], succ_off_[v + 1] - succ_off_[v]};
}

bool CompDag::has_edge(NodeId u, NodeId v) const {
  if (u >= n_ || v >= n_) return false;
  auto s = succs(u);
  return std::binary_search(s.begin(), s.end(), v);
}

const std::string &CompDag::label(NodeId v) const {
  static const std::string empty;
  if (v < labels_.size()) return labels_[v];
  return empty;
}

DagStats CompDag::stats() const {
  DagStats s;
  s.n = n_;
  s.m = edges_.size();
  s.max_in_degree = max_in_;
  for (NodeId v = 0; v < n_; ++v) s.max_out_degree = std::max(s.max_out_degree, out_degree(v));
  s.source_count = sources_.size();
  s.sink_count = sinks_.size();
  std::vector<std::size_t> depth(n_, 0);
  for (NodeId v : topo_) {
    for (NodeId u : preds(v)) depth[v] = std::max(depth[v], depth[u] + 1);
    s.longest_path = std::max(s.longest_path, depth[v]);
  }
  return s;
}

bool CompDag::structurally_equal(const CompDag &other) const {
  return n_ == other.n_ && edges_ == other.edges_;
}

CompDag build_dag(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels) {
  for (const Edge &e : edges) {
    if (e.from >= n || e.to >= n) {
      throw RangeError("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (e.from == e.to) throw CycleError("self-loop on node " + std::to_string(e.from));
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw DuplicateEdgeError("duplicate edge (" + std::to_string(dup->from) + "," +
                             std::to_string(dup->to) + ")");
  }
  if (!labels.empty() && labels.size() != n) {
    throw RangeError("label count does not match node count");
  }

  CompDag d;
  d.n_ = n;
  d.edges_ = std::move(edges);
  d.labels_ = std::move(labels);

  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  for (const Edge &e : d.edges_) {
    ++outdeg[e.from];
    ++indeg[e.to];
  }
  d.pred_off_.assign(n + 1, 0);
  d.succ_off_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    d.pred_off_[v + 1] = d.pred_off_[v] + indeg[v];
    d.succ_off_[v + 1] = d.succ_off_[v] + outdeg[v];
  }
  d.pred_.resize(d.edges_.size());
  d.succ_.resize(d.edges_.size());
  std::vector<std::size_t> pfill(d.pred_off_.begin(), d.pred_off_.end() - 1);
  std::vector<std::size_t> sfill(d.succ_off_.begin(), d.succ_off_.end() - 1);
  // edges are sorted by (from, to), so succ lists come out sorted; preds are
  // filled in order of increasing source id as well.
  for (const Edge &e : d.edges_) {
    d.succ_[sfill[e.from]++] = e.to;
    d.pred_[pfill[e.to]++] = e.from;
  }

  for (NodeId v = 0; v < n; ++v) {
    d.max_in_ = std::max(d.max_in_, indeg[v]);
    if (indeg[v] == 0) d.sources_.push_back(v);
    if (outdeg[v] == 0) d.sinks_.push_back(v);
  }

  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  std::vector<std::size_t> remaining = indeg;
  for (NodeId v : d.sources_) ready.push(v);
  d.topo_.reserve(n);
  while (!ready.empty()) {
    NodeId v = ready.top();
    ready.pop();
    d.topo_.push_back(v);
    for (NodeId w : d.succs(v)) {
      if (--remaining[w] == 0) ready.push(w);
    }
  }
  if (d.topo_.size() != n) throw CycleError("graph contains a directed cycle");
  d.topo_pos_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) d.topo_pos_[d.topo_[i]] = i;
  return d;
}

ChainedDag attach_antirecompute_chains(const CompDag &dag, std::int64_t g,
                                       std::span<const NodeId> targets) {
  if (g < 0) throw ParamError("chain length parameter g must be non-negative");
  std::vector<NodeId> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (NodeId t : sorted) {
    if (t >= dag.n()) throw RangeError("chain target out of range");
    if (!dag.is_source(t)) {
      throw NotASourceError("node " + std::to_string(t) + " has incoming edges");
    }
  }

  ChainedDag out;
  std::size_t len = static_cast<std::size_t>(2 * g);
  std::size_t n = dag.n() + len * sorted.size();
  std::vector<Edge> edges(dag.edges().begin(), dag.edges().end());
  NodeId next = static_cast<NodeId>(dag.n());
  for (NodeId t : sorted) {
    std::vector<NodeId> chain;
    for (std::size_t i = 0; i < len; ++i) {
      chain.push_back(next);
      if (i > 0) edges.push_back({next - 1, next});
      ++next;
    }
    if (!chain.empty()) edges.push_back({chain.back(), t});
    out.targets.push_back(t);
    out.chains.push_back(std::move(chain));
  }
  std::vector<std::string> labels;
  if (!dag.labels().empty()) {
    labels = dag.labels();
    labels.resize(n);
  }
  out.dag = build_dag(n, std::move(edges), std::move(labels));
  out.original_to_new.resize(dag.n());
  for (NodeId v = 0; v < dag.n(); ++v) out.original_to_new[v] = v;
  return out;
}

std::string export_dot(const CompDag &dag) {
  std::ostringstream os;
  os << "digraph dag {\n";
  for (NodeId v = 0; v < dag.n(); ++v) {
    os << "  " << v;
    if (!dag.label(v).empty()) {
      std::string l;
      for (char c : dag.label(v)) {
        if (c == '"' || c == '\\') l += '\\';
        l += c;
      }
      os << " [label=\"" << l << "\"]";
    }
    os << ";\n";
  }
  for (const Edge &e : dag.edges()) os << "  " << e.from << " -> " << e.to << ";\n";
  os << "}\n";
  return os.str();
}

std::string serialize_dag(const CompDag &dag) {
  std::ostringstream os;
  os << "dag " << dag.n() << " " << dag.m() << "\n";
  for (const Edge &e : dag.edges()) os << "e " << e.from << " " << e.to << "\n";
  for (NodeId v = 0; v < dag.n(); ++v) {
    if (!dag.label(v).empty()) os << "label " << v << " " << dag.label(v) << "\n";
  }
  return os.str();
}

namespace {

std::uint64_t parse_count(const std::string &tok, std::size_t line_no) {
  try {
    std::size_t used = 0;
    if (tok.empty() || tok[0] == '-') throw std::invalid_argument("negative");
    unsigned long long x = std::stoull(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception &) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     tok + "'");
  }
}

}  // namespace

CompDag parse_dag(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  bool any_label = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "dag") {
      if (have_header) throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
      std::string a, b, extra;
      if (!(ls >> a >> b) || (ls >> extra)) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed header");
      }
      n = parse_count(a, line_no);
      m = parse_count(b, line_no);
      labels.assign(n, "");
      have_header = true;
    } else if (!have_header) {
      throw ParseError("line " + std::to_string(line_no) + ": record before 'dag' header");
    } else if (kw == "e") {
      std::string a, b, extra;
      if (!(ls >> a >> b) || (ls >> extra)) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed edge");
      }
      edges.push_back({static_cast<NodeId>(parse_count(a, line_no)),
                       static_cast<NodeId>(parse_count(b, line_no))});
    } else if (kw == "label") {
      std::string a;
      if (!(ls >> a)) throw ParseError("line " + std::to_string(line_no) + ": malformed label");
      auto v = parse_count(a, line_no);
      if (v >= n) throw ParseError("line " + std::to_string(line_no) + ": label node out of range");
      std::string rest;
      std::getline(ls, rest);
      auto s = rest.find_first_not_of(" \t");
      auto e = rest.find_last_not_of(" \t\r");
      labels[v] = (s == std::string::npos) ? "" : rest.substr(s, e - s + 1);
      any_label = true;
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + kw + "'");
    }
  }
  if (!have_header) throw ParseError("missing 'dag' header");
  if (edges.size() != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  if (!any_label) labels.clear();
  return build_dag(n, std::move(edges), std::move(labels));
}

}  // namespace pebble
