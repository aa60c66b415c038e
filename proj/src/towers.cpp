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
#include "pebble/towers.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "pebble/errors.hpp"
#include "pebble/strategies.hpp"

namespace pebble {

std::string to_string(const TowerMove &m) {
  const char *names[] = {"advance", "advance-keep", "drop-kept", "release", "spill", "unspill"};
  return std::string(names[static_cast<int>(m.kind)]) + " " + std::to_string(m.tower);
}

std::string to_string(TowerStatus s) {
  switch (s) {
    case TowerStatus::Feasible: return "feasible";
    case TowerStatus::Infeasible: return "infeasible";
    case TowerStatus::Exhausted: return "exhausted";
  }
  return "?";
}

namespace {

const TowerMetadata &towers_of(const ReductionArtifact &a) {
  if (!a.towers || a.towers->towers.empty()) {
    throw MetadataError("artifact of family '" + a.family + "' carries no tower metadata");
  }
  return *a.towers;
}

struct TState {
  std::vector<int> cur;
  std::vector<char> keep;
  std::vector<int> spilled;
  int spill_ops = 0;

  std::string key() const {
    std::string k;
    k.reserve(cur.size() * 4 + 2);
    for (std::size_t t = 0; t < cur.size(); ++t) {
      k.push_back(static_cast<char>(cur[t] + 1));
      k.push_back(keep[t]);
      k.push_back(static_cast<char>(spilled[t] & 0xff));
      k.push_back(static_cast<char>(spilled[t] >> 8));
    }
    k.push_back(static_cast<char>(spill_ops & 0xff));
    k.push_back(static_cast<char>(spill_ops >> 8));
    return k;
  }
};

// Abstract engine for one copy, towers indexed locally.
class Engine {
 public:
  Engine(const TowerMetadata &meta, const CompDag &dag, std::int64_t r, int first, int end, bool allow_keep,
         int max_spill_ops)
      : meta_(meta), r_(r), first_(first), nt_(end - first), allow_keep_(allow_keep), max_spill_ops_(max_spill_ops) {
    last_.resize(nt_);
    pre_.resize(nt_);
    deps_.resize(nt_);
    releasable_.assign(nt_, true);
    std::set<NodeId> carried;
    for (const Tower &tw : meta.towers)
      if (tw.starts_pebbled)
        for (NodeId v : tw.levels[0]) carried.insert(v);
    for (int t = 0; t < nt_; ++t) {
      const Tower &tw = meta.towers[first + t];
      last_[t] = static_cast<int>(tw.levels.size()) - 1;
      deps_[t].resize(tw.levels.size());
      pre_[t].resize(tw.levels.size());
      for (NodeId v : tw.levels.back())
        if (dag.is_sink(v) || carried.count(v)) releasable_[t] = false;
    }
    for (int t = 0; t < nt_; ++t) {
      const Tower &tw = meta.towers[first + t];
      for (std::size_t lv = 0; lv < tw.prereqs.size(); ++lv) {
        for (const LevelRef &p : tw.prereqs[lv]) {
          int pt = p.tower - first;
          if (pt < 0 || pt >= nt_) throw MetadataError("prerequisite crosses copies");
          pre_[t][lv].push_back({pt, p.level});
          deps_[pt][p.level].push_back({t, static_cast<int>(lv)});
        }
      }
    }
  }

  int size() const { return nt_; }
  int global(int t) const { return first_ + t; }

  TState start() const {
    TState s;
    s.cur.resize(nt_);
    s.keep.assign(nt_, 0);
    s.spilled.assign(nt_, 0);
    for (int t = 0; t < nt_; ++t) s.cur[t] = meta_.towers[first_ + t].starts_pebbled ? 0 : -1;
    return s;
  }

  std::int64_t lsize(int t, int lv) const { return meta_.towers[first_ + t].level_size(lv); }

  std::int64_t active(const TState &s, int t) const {
    std::int64_t u = 0;
    if (s.cur[t] >= 0 && s.cur[t] <= last_[t]) u += lsize(t, s.cur[t]) - s.spilled[t];
    if (s.keep[t]) u += lsize(t, s.cur[t] - 1);
    return u;
  }

  std::int64_t usage(const TState &s) const {
    std::int64_t u = 0;
    for (int t = 0; t < nt_; ++t) u += active(s, t);
    return u;
  }

  bool pebbled(const TState &s, int t, int lv) const {
    return (s.cur[t] == lv && s.spilled[t] == 0) || (s.keep[t] && s.cur[t] - 1 == lv);
  }

  bool can_drop(const TState &s, int t, int lv) const {
    for (auto [t2, l2] : deps_[t][lv])
      if (s.cur[t2] < l2) return false;
    return true;
  }

  bool goal(const TState &s) const {
    for (int t = 0; t < nt_; ++t)
      if (s.cur[t] < last_[t] || s.spilled[t] != 0) return false;
    return true;
  }

  // Free moves that never hurt: dropping kept levels and releasing finished towers.
  void closure(TState &s, std::vector<TowerMove> &moves) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int t = 0; t < nt_; ++t) {
        if (s.keep[t] && can_drop(s, t, s.cur[t] - 1)) {
          s.keep[t] = 0;
          moves.push_back({TowerMove::Kind::DropKept, global(t)});
          changed = true;
        }
        if (releasable_[t] && s.cur[t] == last_[t] && !s.keep[t] && s.spilled[t] == 0 && can_drop(s, t, last_[t])) {
          s.cur[t] = last_[t] + 1;
          moves.push_back({TowerMove::Kind::Release, global(t)});
          changed = true;
        }
      }
    }
  }

  // Applies one move if legal; returns an explanation otherwise.
  std::optional<std::string> apply(TState &s, const TowerMove &m) const {
    int t = m.tower - first_;
    if (t < 0 || t >= nt_) return "tower " + std::to_string(m.tower) + " is not in this copy";
    const int cur = s.cur[t];
    switch (m.kind) {
      case TowerMove::Kind::Advance:
      case TowerMove::Kind::AdvanceKeep: {
        bool keep = m.kind == TowerMove::Kind::AdvanceKeep;
        if (cur >= last_[t]) return "tower is already at its last level";
        if (s.spilled[t] || s.keep[t]) return "tower has spilled or kept nodes";
        if (keep && (!allow_keep_ || cur < 0)) return "keeping is not allowed here";
        int next = cur + 1;
        for (auto [t2, l2] : pre_[t][next])
          if (!pebbled(s, t2, l2)) return "prerequisite level is not pebbled";
        if (!keep && cur >= 0 && !can_drop(s, t, cur)) return "current level is still needed elsewhere";
        std::int64_t peak = meta_.transition_peak(first_ + t, next, keep && next > 0);
        if (usage(s) - active(s, t) + peak > r_) return "advance exceeds the red-pebble budget";
        s.cur[t] = next;
        s.keep[t] = keep ? 1 : 0;
        return std::nullopt;
      }
      case TowerMove::Kind::DropKept:
        if (!s.keep[t]) return "nothing kept";
        if (!can_drop(s, t, cur - 1)) return "kept level is still needed";
        s.keep[t] = 0;
        return std::nullopt;
      case TowerMove::Kind::Release:
        if (!releasable_[t] || cur != last_[t] || s.keep[t] || s.spilled[t]) return "tower cannot be released now";
        if (!can_drop(s, t, cur)) return "last level is still needed";
        s.cur[t] = last_[t] + 1;
        return std::nullopt;
      case TowerMove::Kind::Spill:
        if (cur < 0 || cur > last_[t] || s.keep[t]) return "no level to spill from";
        if (s.spilled[t] >= lsize(t, cur)) return "level fully spilled";
        if (s.spill_ops >= max_spill_ops_) return "spill allowance used up";
        ++s.spilled[t];
        ++s.spill_ops;
        return std::nullopt;
      case TowerMove::Kind::Unspill:
        if (s.spilled[t] == 0) return "nothing spilled";
        --s.spilled[t];
        return std::nullopt;
    }
    return "unknown move";
  }

  std::vector<TowerMove> candidate_moves(const TState &s) const {
    std::vector<TowerMove> out;
    for (int t = 0; t < nt_; ++t) {
      out.push_back({TowerMove::Kind::Advance, global(t)});
      if (allow_keep_) out.push_back({TowerMove::Kind::AdvanceKeep, global(t)});
      if (max_spill_ops_ > 0) {
        if (s.spilled[t] > 0) out.push_back({TowerMove::Kind::Unspill, global(t)});
        if (s.spill_ops < max_spill_ops_) out.push_back({TowerMove::Kind::Spill, global(t)});
      }
    }
    return out;
  }

 private:
  const TowerMetadata &meta_;
  std::int64_t r_;
  int first_;
  int nt_;
  bool allow_keep_;
  int max_spill_ops_;
  std::vector<int> last_;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> pre_, deps_;
  std::vector<bool> releasable_;
};

struct DfsSearch {
  const Engine &eng;
  std::size_t max_states;
  std::unordered_set<std::string> seen;
  std::vector<TowerMove> path;
  bool exhausted = false;

  bool dfs(TState s) {
    std::size_t mark = path.size();
    eng.closure(s, path);
    if (eng.goal(s)) return true;
    if (!seen.insert(s.key()).second) {
      path.resize(mark);
      return false;
    }
    if (seen.size() > max_states) {
      exhausted = true;
      path.resize(mark);
      return false;
    }
    for (const TowerMove &m : eng.candidate_moves(s)) {
      TState next = s;
      if (eng.apply(next, m)) continue;
      path.push_back(m);
      if (dfs(std::move(next))) return true;
      path.pop_back();
      if (exhausted) break;
    }
    path.resize(mark);
    return false;
  }
};

}  // namespace

TowerSearchResult tower_abstract_opt(const ReductionArtifact &artifact, std::int64_t r,
                                     const TowerSearchOptions &options) {
  const TowerMetadata &meta = towers_of(artifact);
  TowerSearchResult res;
  res.status = TowerStatus::Feasible;
  for (auto [first, end] : meta.copy_ranges) {
    Engine eng(meta, artifact.dag, r, first, end, options.allow_keep, 0);
    DfsSearch search{eng, options.max_states, {}, {}, false};
    bool ok = search.dfs(eng.start());
    res.states += search.seen.size();
    if (!ok) {
      res.status = search.exhausted ? TowerStatus::Exhausted : TowerStatus::Infeasible;
      res.progression.clear();
      return res;
    }
    res.progression.insert(res.progression.end(), search.path.begin(), search.path.end());
  }
  return res;
}

TowerSearchResult tower_min_spill_search(const ReductionArtifact &artifact, std::int64_t r, std::int64_t g,
                                         int max_spill_ops, const TowerSearchOptions &options) {
  const TowerMetadata &meta = towers_of(artifact);
  TowerSearchResult res;
  res.status = TowerStatus::Feasible;
  for (auto [first, end] : meta.copy_ranges) {
    Engine eng(meta, artifact.dag, r, first, end, options.allow_keep, max_spill_ops);
    struct Node {
      TState s;
      int parent;
      std::vector<TowerMove> moves;  // moves leading here from parent
      std::int64_t cost;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, std::int64_t> best;
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    {
      TState s = eng.start();
      std::vector<TowerMove> mv;
      eng.closure(s, mv);
      best[s.key()] = 0;
      nodes.push_back({s, -1, mv, 0});
      pq.push({0, 0});
    }
    int found = -1;
    bool exhausted = false;
    while (!pq.empty()) {
      auto [c, id] = pq.top();
      pq.pop();
      if (c != nodes[id].cost) continue;
      TState s = nodes[id].s;
      if (best[s.key()] < c) continue;
      if (eng.goal(s)) {
        found = id;
        break;
      }
      if (best.size() > options.max_states) {
        exhausted = true;
        break;
      }
      for (const TowerMove &m : eng.candidate_moves(s)) {
        TState next = s;
        if (eng.apply(next, m)) continue;
        std::vector<TowerMove> mv{m};
        eng.closure(next, mv);
        std::int64_t nc =
            c + ((m.kind == TowerMove::Kind::Spill || m.kind == TowerMove::Kind::Unspill) ? g : 0);
        std::string key = next.key();
        auto it = best.find(key);
        if (it != best.end() && it->second <= nc) continue;
        best[key] = nc;
        nodes.push_back({std::move(next), id, std::move(mv), nc});
        pq.push({nc, static_cast<int>(nodes.size()) - 1});
      }
    }
    res.states += best.size();
    if (found < 0) {
      res.status = exhausted ? TowerStatus::Exhausted : TowerStatus::Infeasible;
      res.progression.clear();
      return res;
    }
    std::vector<std::vector<TowerMove>> segs;
    for (int id = found; id >= 0; id = nodes[id].parent) segs.push_back(nodes[id].moves);
    for (auto it = segs.rbegin(); it != segs.rend(); ++it)
      res.progression.insert(res.progression.end(), it->begin(), it->end());
    res.io_cost += nodes[found].cost;
  }
  return res;
}

std::optional<std::string> check_progression(const ReductionArtifact &artifact, std::int64_t r,
                                             const std::vector<TowerMove> &moves) {
  const TowerMetadata &meta = towers_of(artifact);
  std::size_t i = 0;
  for (std::size_t c = 0; c < meta.copy_ranges.size(); ++c) {
    auto [first, end] = meta.copy_ranges[c];
    Engine eng(meta, artifact.dag, r, first, end, true, 1 << 30);
    TState s = eng.start();
    while (i < moves.size() && moves[i].tower >= first && moves[i].tower < end) {
      if (auto err = eng.apply(s, moves[i])) return "move " + std::to_string(i) + " (" + to_string(moves[i]) + "): " + *err;
      ++i;
    }
    if (!eng.goal(s)) return "copy " + std::to_string(c) + " does not finish";
  }
  if (i != moves.size()) return "move " + std::to_string(i) + " is out of copy order";
  return std::nullopt;
}

std::vector<TowerMove> clique_witness_progression(const ReductionArtifact &artifact, const std::vector<int> &clique) {
  const TowerMetadata &meta = towers_of(artifact);
  if (artifact.family != "clique-reduction" || !artifact.input_graph) {
    throw MismatchError("clique witness needs a clique-reduction artifact");
  }
  const Graph &graph = *artifact.input_graph;
  const int q = static_cast<int>(artifact.param("q"));
  std::set<int> chosen(clique.begin(), clique.end());
  if (static_cast<int>(chosen.size()) != q) throw WitnessUnavailableError("clique must have exactly q distinct nodes");
  for (int u : chosen) {
    if (u < 0 || u >= graph.n) throw WitnessUnavailableError("clique node out of range");
    for (int v : chosen)
      if (u < v && !graph.has_edge(u, v)) throw WitnessUnavailableError("given nodes do not form a clique");
  }
  std::vector<TowerMove> out;
  for (auto [first, end] : meta.copy_ranges) {
    std::map<std::string, int> by_name;
    for (int t = first; t < end; ++t) by_name[meta.towers[t].name] = t;
    const int main = by_name.at("main");
    auto adv = [&](int t, int times = 1) {
      for (int i = 0; i < times; ++i) out.push_back({TowerMove::Kind::Advance, t});
    };
    auto node_t = [&](int v) { return by_name.at("node" + std::to_string(v)); };
    auto edge_t = [&](int e) { return by_name.at("edge" + std::to_string(e)); };
    std::vector<int> clique_edges, other_edges, other_nodes;
    for (int e = 0; e < graph.m(); ++e) {
      auto [u, v] = graph.edges[e];
      (chosen.count(u) && chosen.count(v) ? clique_edges : other_edges).push_back(e);
    }
    for (int v = 0; v < graph.n; ++v)
      if (!chosen.count(v)) other_nodes.push_back(v);

    adv(main, meta.towers[main].starts_pebbled ? 1 : 2);  // up to L1
    for (int v = 0; v < graph.n; ++v) adv(node_t(v));
    for (int e = 0; e < graph.m(); ++e) adv(edge_t(e));
    adv(main, 2);  // L2, L3
    for (int v : chosen) adv(node_t(v), 2);
    adv(main);  // L4
    for (int e = 0; e < graph.m(); ++e) adv(edge_t(e));
    adv(main, 2);  // L5, L6
    for (int e : clique_edges) adv(edge_t(e), 2);
    adv(main, 2);  // L7, L8
    for (int v : other_nodes) adv(node_t(v), 2);
    for (int e : other_edges) adv(edge_t(e), 2);
    adv(main);  // L9
    for (int v = 0; v < graph.n; ++v) out.push_back({TowerMove::Kind::Release, node_t(v)});
    for (int e = 0; e < graph.m(); ++e) out.push_back({TowerMove::Kind::Release, edge_t(e)});
    adv(main);  // sink
  }
  return out;
}

Strategy progression_to_strategy(const ReductionArtifact &artifact, const ProblemInstance &instance,
                                 const std::vector<TowerMove> &moves) {
  const TowerMetadata &meta = towers_of(artifact);
  const CompDag &dag = artifact.dag;
  StrategyBuilder b(instance, dag);
  std::vector<int> cur(meta.towers.size());
  std::vector<std::vector<NodeId>> spilled(meta.towers.size());
  for (std::size_t t = 0; t < meta.towers.size(); ++t) cur[t] = meta.towers[t].starts_pebbled ? 0 : -1;

  for (const TowerMove &m : moves) {
    const Tower &tw = meta.towers.at(static_cast<std::size_t>(m.tower));
    int &c = cur[m.tower];
    switch (m.kind) {
      case TowerMove::Kind::Advance:
      case TowerMove::Kind::AdvanceKeep: {
        const bool keep = m.kind == TowerMove::Kind::AdvanceKeep;
        const int next = c + 1;
        const auto &V = tw.levels.at(next);
        if (next == 0) {
          for (NodeId v : V) b.compute(1, v);
        } else if (tw.wiring[next] == LevelWiring::Complete) {
          for (NodeId v : V) b.compute(1, v);
          if (!keep) b.drop(1, tw.levels[c]);
        } else {
          const auto &U = tw.levels[c];
          std::map<NodeId, std::size_t> pos;
          for (std::size_t j = 0; j < V.size(); ++j) pos[V[j]] = j;
          // last position in V that still reads each node of U
          std::vector<std::ptrdiff_t> last_reader(U.size(), -1);
          for (std::size_t i = 0; i < U.size(); ++i) {
            for (NodeId w : dag.succs(U[i])) {
              auto it = pos.find(w);
              if (it != pos.end()) last_reader[i] = std::max<std::ptrdiff_t>(last_reader[i], it->second);
            }
          }
          std::vector<bool> gone(U.size(), false);
          auto sweep = [&](std::ptrdiff_t upto) {
            if (keep) return;
            std::vector<NodeId> rm;
            for (std::size_t i = 0; i < U.size(); ++i) {
              if (!gone[i] && last_reader[i] <= upto) {
                gone[i] = true;
                rm.push_back(U[i]);
              }
            }
            b.drop(1, rm);
          };
          sweep(-1);
          for (std::size_t j = 0; j < V.size(); ++j) {
            b.compute(1, V[j]);
            sweep(static_cast<std::ptrdiff_t>(j));
          }
        }
        c = next;
        break;
      }
      case TowerMove::Kind::DropKept:
        b.drop(1, tw.levels.at(c - 1));
        break;
      case TowerMove::Kind::Release:
        b.drop(1, tw.levels.at(c));
        c = static_cast<int>(tw.levels.size());
        break;
      case TowerMove::Kind::Spill: {
        const auto &L = tw.levels.at(c);
        NodeId v = L[L.size() - 1 - spilled[m.tower].size()];
        if (!b.blue(v)) b.save(1, v);
        b.drop(1, v);
        spilled[m.tower].push_back(v);
        break;
      }
      case TowerMove::Kind::Unspill:
        b.load(1, spilled[m.tower].back());
        spilled[m.tower].pop_back();
        break;
    }
  }
  b.finish();
  return b.take();
}

}  // namespace pebble
