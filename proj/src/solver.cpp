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
#include "pebble/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <queue>
#include <unordered_map>
#include <vector>

#include "pebble/errors.hpp"

namespace pebble {

std::string to_string(OptStatus s) {
  switch (s) {
    case OptStatus::Optimal: return "optimal";
    case OptStatus::Exhausted: return "exhausted";
    case OptStatus::Infeasible: return "infeasible";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;
constexpr int K = kSolverMaxShades;
constexpr std::uint8_t kNone = 0xff;

inline Mask bit(int x) { return Mask{1} << x; }

struct Packed {
  std::array<Mask, K> red{};
  Mask blue = 0;
  Mask computed = 0;
  bool operator==(const Packed &) const = default;
};

struct PackedHash {
  std::size_t operator()(const Packed &p) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](Mask x) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    };
    for (Mask x : p.red) mix(x);
    mix(p.blue);
    mix(p.computed);
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

// A search edge. Shades are 0-based and refer to the parent's labelling.
// Lazy mode: evict[i] is dropped from shade[i] right before the rule.
// Explicit mode also has single deletions (kind Delete, shade 0 = blue,
// otherwise shade-1).
struct Move {
  RuleKind kind = RuleKind::Compute;
  std::uint8_t count = 0;
  std::array<std::uint8_t, K> shade{};
  std::array<std::uint8_t, K> node{};
  std::array<std::uint8_t, K> evict{};
};

using Perm = std::array<std::uint8_t, K>;

struct Record {
  Packed state;
  std::int64_t cost = 0;
  std::int64_t io = 0;
  std::int32_t parent = -1;
  Move move;
  Perm perm{};  // canonical index -> index in the parent's labelling
  bool closed = false;
};

struct Succ {
  Packed state;
  std::int64_t dcost = 0;
  std::int64_t dio = 0;
  Move move;
  Perm perm{};
  std::int64_t hcost = 0;
  std::int64_t hio = 0;
  bool dead = false;
};

struct Model {
  int n = 0;
  int k = 1;
  std::int64_t r = 1;
  std::int64_t g = 1;
  RuleVariant variant = RuleVariant::Mpp;
  TerminalMode terminal = TerminalMode::AnyPebbleOnSinks;
  std::vector<Mask> pred;
  Mask sinks = 0;
  Mask all = 0;
  bool lazy = true;
  bool symmetry = true;
  bool heuristic = true;
  Objective objective = Objective::MinCost;
};

Mask pebbled(const Model &m, const Packed &s) {
  Mask p = s.blue;
  for (int j = 0; j < m.k; ++j) p |= s.red[j];
  return p;
}

bool is_goal(const Model &m, const Packed &s) {
  if (m.terminal == TerminalMode::BluePebbleOnSinks) return (m.sinks & ~s.blue) == 0;
  return (m.sinks & ~pebbled(m, s)) == 0;
}

// Every unpebbled node that some unpebbled sink still depends on through
// unpebbled nodes has to be computed again; k per step at most.
void estimate(const Model &m, Succ &x) {
  x.hcost = x.hio = 0;
  x.dead = false;
  if (!m.heuristic) return;
  const Packed &s = x.state;
  Mask have = pebbled(m, s);
  Mask need = m.sinks & ~have;
  Mask frontier = need;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    Mask add = m.pred[v] & ~have & ~need;
    need |= add;
    frontier |= add;
  }
  if (m.variant == RuleVariant::OneShot && (need & s.computed)) {
    x.dead = true;
    return;
  }
  x.hcost = (std::popcount(need) + m.k - 1) / m.k;
  if (m.terminal == TerminalMode::BluePebbleOnSinks && (m.sinks & ~s.blue)) {
    x.hcost += m.g;
    x.hio = 1;
  }
}

void canonicalize(const Model &m, Packed &s, Perm &perm) {
  for (int j = 0; j < K; ++j) perm[j] = static_cast<std::uint8_t>(j);
  if (!m.symmetry || m.k == 1) return;
  std::stable_sort(perm.begin(), perm.begin() + m.k,
                   [&s](std::uint8_t a, std::uint8_t b) { return s.red[a] < s.red[b]; });
  Packed raw = s;
  for (int c = 0; c < m.k; ++c) s.red[c] = raw.red[perm[c]];
}

class Expander {
 public:
  Expander(const Model &m, const Packed &base, std::vector<Succ> &out) : m_(m), base_(base), out_(out) {}

  void run() {
    if (!m_.lazy && m_.variant != RuleVariant::NoDelete) {
      for (int j = 0; j < m_.k; ++j) {
        for (Mask rest = base_.red[j]; rest; rest &= rest - 1) {
          int x = std::countr_zero(rest);
          Succ s;
          s.state = base_;
          s.state.red[j] &= ~bit(x);
          s.move.kind = RuleKind::Delete;
          s.move.count = 1;
          s.move.shade[0] = static_cast<std::uint8_t>(j + 1);
          s.move.node[0] = static_cast<std::uint8_t>(x);
          push(s);
        }
      }
      for (Mask rest = base_.blue; rest; rest &= rest - 1) {
        int x = std::countr_zero(rest);
        Succ s;
        s.state = base_;
        s.state.blue &= ~bit(x);
        s.move.kind = RuleKind::Delete;
        s.move.count = 1;
        s.move.shade[0] = 0;
        s.move.node[0] = static_cast<std::uint8_t>(x);
        push(s);
      }
    }
    for (RuleKind kind : {RuleKind::Compute, RuleKind::Save, RuleKind::Load}) {
      kind_ = kind;
      cur_ = base_;
      mv_ = Move{};
      mv_.kind = kind;
      placed_ = 0;
      go(0);
    }
  }

 private:
  void push(Succ &s) {
    canonicalize(m_, s.state, s.perm);
    estimate(m_, s);
    if (!s.dead) out_.push_back(s);
  }

  void emit() {
    Succ s;
    s.state = cur_;
    if (kind_ == RuleKind::Compute && m_.variant == RuleVariant::OneShot) s.state.computed |= placed_;
    s.dcost = kind_ == RuleKind::Compute ? 1 : m_.g;
    s.dio = kind_ == RuleKind::Compute ? 0 : 1;
    s.move = mv_;
    push(s);
  }

  void place(int j, int x, int evict) {
    Packed saved = cur_;
    Move saved_mv = mv_;
    Mask saved_placed = placed_;
    if (kind_ == RuleKind::Save) {
      cur_.blue |= bit(x);
    } else {
      Mask red = base_.red[j];
      if (evict >= 0) red &= ~bit(evict);
      cur_.red[j] = red | bit(x);
    }
    placed_ |= bit(x);
    mv_.shade[mv_.count] = static_cast<std::uint8_t>(j);
    mv_.node[mv_.count] = static_cast<std::uint8_t>(x);
    mv_.evict[mv_.count] = evict < 0 ? kNone : static_cast<std::uint8_t>(evict);
    ++mv_.count;
    go(j + 1);
    cur_ = saved;
    mv_ = saved_mv;
    placed_ = saved_placed;
  }

  // Place x on shade j, dropping one pebble outside keep if the shade is full.
  void fit(int j, int x, Mask keep) {
    Mask red = base_.red[j];
    if (std::popcount(red) < m_.r) {
      place(j, x, -1);
    } else if (m_.lazy && m_.variant != RuleVariant::NoDelete) {
      for (Mask rest = red & ~keep; rest; rest &= rest - 1) place(j, x, std::countr_zero(rest));
    }
  }

  void go(int j) {
    if (j == m_.k) {
      if (mv_.count > 0) emit();
      return;
    }
    go(j + 1);
    Mask red = base_.red[j];
    switch (kind_) {
      case RuleKind::Compute: {
        Mask cand = m_.all & ~red;
        if (m_.variant == RuleVariant::OneShot) cand &= ~(base_.computed | placed_);
        for (; cand; cand &= cand - 1) {
          int x = std::countr_zero(cand);
          if (m_.pred[x] & ~red) continue;
          fit(j, x, m_.pred[x]);
        }
        break;
      }
      case RuleKind::Load:
        for (Mask cand = base_.blue & ~red; cand; cand &= cand - 1) fit(j, std::countr_zero(cand), 0);
        break;
      case RuleKind::Save:
        for (Mask cand = red & ~base_.blue & ~placed_; cand; cand &= cand - 1) place(j, std::countr_zero(cand), -1);
        break;
      default:
        break;
    }
  }

  const Model &m_;
  const Packed &base_;
  std::vector<Succ> &out_;
  RuleKind kind_ = RuleKind::Compute;
  Packed cur_;
  Move mv_;
  Mask placed_ = 0;
};

Strategy reconstruct(const std::vector<Record> &recs, std::int32_t goal) {
  std::vector<std::int32_t> chain;
  for (std::int32_t i = goal; i >= 0; i = recs[i].parent) chain.push_back(i);
  std::reverse(chain.begin(), chain.end());
  Perm map{};
  for (int j = 0; j < K; ++j) map[j] = static_cast<std::uint8_t>(j);
  Strategy out;
  for (std::size_t c = 1; c < chain.size(); ++c) {
    const Record &rec = recs[chain[c]];
    const Move &mv = rec.move;
    if (mv.kind == RuleKind::Delete) {
      int shade = mv.shade[0] == 0 ? 0 : map[mv.shade[0] - 1] + 1;
      out.steps.push_back(TransitionRule::remove({{shade, mv.node[0]}}));
    } else {
      std::vector<Removal> drops;
      std::vector<Placement> places;
      for (int i = 0; i < mv.count; ++i) {
        int shade = map[mv.shade[i]] + 1;
        if (mv.evict[i] != kNone) drops.push_back({shade, mv.evict[i]});
        places.push_back({shade, mv.node[i]});
      }
      if (!drops.empty()) out.steps.push_back(TransitionRule::remove(std::move(drops)));
      out.steps.push_back({mv.kind, std::move(places), {}, {}});
    }
    Perm next{};
    for (int j = 0; j < K; ++j) next[j] = map[rec.perm[j]];
    map = next;
  }
  return out;
}

struct QueueEntry {
  std::int64_t k1;
  std::int64_t k2;
  std::uint64_t seq;
  std::int32_t idx;
  bool operator>(const QueueEntry &o) const {
    if (k1 != o.k1) return k1 > o.k1;
    if (k2 != o.k2) return k2 > o.k2;
    return seq > o.seq;
  }
};

struct Settled {
  Mask blue;
  std::int64_t cost;
  std::int64_t io;
};

constexpr std::size_t kDominanceScan = 64;
constexpr std::size_t kBatchLimit = 4096;

OptResult search(const Model &m, const SearchLimits &limits, bool dominance, bool parallel) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  OptResult res;

  std::vector<Record> recs;
  std::unordered_map<Packed, std::int32_t, PackedHash> index;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> open;
  std::unordered_map<Packed, std::vector<Settled>, PackedHash> settled;
  std::uint64_t seq = 0;

  auto keys = [&m](std::int64_t cost, std::int64_t io, std::int64_t hc, std::int64_t hi) {
    if (m.objective == Objective::MinIo) return std::pair{io + hi, cost + hc};
    return std::pair{cost + hc, io + hi};
  };
  auto better = [&m](std::int64_t c1, std::int64_t i1, std::int64_t c2, std::int64_t i2) {
    if (m.objective == Objective::MinIo) return std::pair{i1, c1} < std::pair{i2, c2};
    return std::pair{c1, i1} < std::pair{c2, i2};
  };

  {
    Succ root;
    estimate(m, root);
    if (root.dead) {
      res.status = OptStatus::Infeasible;
      res.reason = "no strategy reaches a terminal configuration";
      return res;
    }
    recs.push_back(Record{});
    for (int j = 0; j < K; ++j) recs[0].perm[j] = static_cast<std::uint8_t>(j);
    index.emplace(recs[0].state, 0);
    auto [a, b] = keys(0, 0, root.hcost, root.hio);
    open.push({a, b, seq++, 0});
  }

  std::vector<std::int32_t> batch;
  std::vector<std::vector<Succ>> produced;
  while (!open.empty()) {
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > limits.max_seconds) {
      res.status = OptStatus::Exhausted;
      res.reason = "time limit reached";
      res.states = recs.size();
      return res;
    }
    batch.clear();
    const QueueEntry head = open.top();
    while (!open.empty() && open.top().k1 == head.k1 && open.top().k2 == head.k2 && batch.size() < kBatchLimit) {
      std::int32_t idx = open.top().idx;
      open.pop();
      Record &rec = recs[idx];
      if (rec.closed || index[rec.state] != idx) continue;
      rec.closed = true;
      batch.push_back(idx);
    }
    for (std::int32_t idx : batch) {
      if (is_goal(m, recs[idx].state)) {
        res.status = OptStatus::Optimal;
        res.opt_total = recs[idx].cost;
        res.opt_io_steps = recs[idx].io;
        res.witness = reconstruct(recs, idx);
        res.states = recs.size();
        return res;
      }
    }
    if (dominance) {
      std::size_t keep = 0;
      for (std::int32_t idx : batch) {
        const Record &rec = recs[idx];
        Packed key = rec.state;
        key.blue = 0;
        auto &list = settled[key];
        bool covered = false;
        for (std::size_t i = 0; i < list.size() && i < kDominanceScan; ++i) {
          const Settled &s = list[i];
          if ((rec.state.blue & ~s.blue) == 0 && s.cost <= rec.cost && s.io <= rec.io) {
            covered = true;
            break;
          }
        }
        if (covered) continue;
        if (list.size() < kDominanceScan) list.push_back({rec.state.blue, rec.cost, rec.io});
        batch[keep++] = idx;
      }
      batch.resize(keep);
    }

    produced.assign(batch.size(), {});
    const std::int64_t count = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel && count > 1)
    for (std::int64_t i = 0; i < count; ++i) {
      Expander(m, recs[batch[i]].state, produced[i]).run();
    }

    for (std::size_t i = 0; i < batch.size(); ++i) {
      const std::int32_t parent = batch[i];
      for (Succ &s : produced[i]) {
        const std::int64_t cost = recs[parent].cost + s.dcost;
        const std::int64_t io = recs[parent].io + s.dio;
        auto it = index.find(s.state);
        if (it != index.end()) {
          const Record &old = recs[it->second];
          if (old.closed || !better(cost, io, old.cost, old.io)) continue;
        }
        Record rec;
        rec.state = s.state;
        rec.cost = cost;
        rec.io = io;
        rec.parent = parent;
        rec.move = s.move;
        rec.perm = s.perm;
        std::int32_t idx = static_cast<std::int32_t>(recs.size());
        recs.push_back(rec);
        index[s.state] = idx;
        auto [a, b] = keys(cost, io, s.hcost, s.hio);
        open.push({a, b, seq++, idx});
      }
    }
    if (recs.size() > limits.max_states) {
      res.status = OptStatus::Exhausted;
      res.reason = "state limit reached";
      res.states = recs.size();
      return res;
    }
  }
  res.status = OptStatus::Infeasible;
  res.reason = "no strategy reaches a terminal configuration";
  res.states = recs.size();
  return res;
}

// Returns false (and fills res) when the instance is outside what the
// search handles.
bool prepare(const ProblemInstance &inst, const CompDag &dag, const SearchLimits &limits, Model &m, OptResult &res) {
  if (inst.variant == RuleVariant::DirectSend) {
    throw VariantError("exact search does not handle the direct-send variant");
  }
  if (inst.k < 1 || inst.r < 1 || inst.g < 0) throw ParamError("need k >= 1, r >= 1, g >= 0");
  if (dag.n() > limits.max_n || dag.n() > kSolverMaxNodes) {
    res.status = OptStatus::Exhausted;
    res.reason = "node count " + std::to_string(dag.n()) + " above limit";
    return false;
  }
  if (inst.k > limits.max_k || inst.k > kSolverMaxShades) {
    res.status = OptStatus::Exhausted;
    res.reason = "processor count " + std::to_string(inst.k) + " above limit";
    return false;
  }
  if (dag.n() > 0 && inst.r <= static_cast<std::int64_t>(dag.max_in_degree())) {
    res.status = OptStatus::Infeasible;
    res.reason = "r must exceed the maximum in-degree";
    return false;
  }
  m.n = static_cast<int>(dag.n());
  m.k = inst.k;
  m.r = inst.r;
  m.g = inst.g;
  m.variant = inst.variant;
  m.terminal = inst.terminal;
  m.pred.assign(dag.n(), 0);
  for (NodeId v = 0; v < dag.n(); ++v) {
    m.all |= bit(static_cast<int>(v));
    for (NodeId u : dag.preds(v)) m.pred[v] |= bit(static_cast<int>(u));
  }
  for (NodeId v : dag.sinks()) m.sinks |= bit(static_cast<int>(v));
  return true;
}

}  // namespace

OptResult exact_opt(const ProblemInstance &instance, const CompDag &dag, const SearchLimits &limits,
                    const SearchOptions &options) {
  Model m;
  OptResult res;
  if (!prepare(instance, dag, limits, m, res)) return res;
  m.lazy = true;
  m.symmetry = options.symmetry;
  m.heuristic = options.heuristic;
  m.objective = options.objective;
  return search(m, limits, options.dominance, options.parallel);
}

OptResult exact_opt_reference(const ProblemInstance &instance, const CompDag &dag, const SearchLimits &limits,
                              Objective objective) {
  Model m;
  OptResult res;
  if (!prepare(instance, dag, limits, m, res)) return res;
  m.lazy = false;
  m.symmetry = false;
  m.heuristic = false;
  m.objective = objective;
  return search(m, limits, false, false);
}

}  // namespace pebble
