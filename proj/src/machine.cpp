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
#include "pebble/machine.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pebble/errors.hpp"

namespace pebble {

std::string to_string(const Rational &q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_string(RuleVariant v) {
  switch (v) {
    case RuleVariant::Mpp: return "mpp";
    case RuleVariant::OneShot: return "one-shot";
    case RuleVariant::NoDelete: return "no-delete";
    case RuleVariant::DirectSend: return "direct-send";
  }
  return "?";
}

RuleVariant parse_variant(const std::string &s) {
  if (s == "mpp" || s == "spp") return RuleVariant::Mpp;
  if (s == "one-shot" || s == "oneshot") return RuleVariant::OneShot;
  if (s == "no-delete" || s == "nodelete") return RuleVariant::NoDelete;
  if (s == "direct-send" || s == "directsend") return RuleVariant::DirectSend;
  throw ParseError("unknown variant '" + s + "'");
}

std::string to_string(TerminalMode t) {
  return t == TerminalMode::AnyPebbleOnSinks ? "any" : "blue";
}

TerminalMode parse_terminal_mode(const std::string &s) {
  if (s == "any") return TerminalMode::AnyPebbleOnSinks;
  if (s == "blue") return TerminalMode::BluePebbleOnSinks;
  throw ParseError("unknown terminal mode '" + s + "'");
}

std::string to_string(RuleKind k) {
  switch (k) {
    case RuleKind::Save: return "save";
    case RuleKind::Load: return "load";
    case RuleKind::Compute: return "compute";
    case RuleKind::Delete: return "delete";
    case RuleKind::DirectComm: return "comm";
  }
  return "?";
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Precondition: return "PreconditionError";
    case ViolationKind::Budget: return "BudgetError";
    case ViolationKind::Variant: return "VariantError";
    case ViolationKind::Injectivity: return "InjectivityError";
    case ViolationKind::Range: return "RangeError";
    case ViolationKind::Infeasible: return "InfeasibleError";
    case ViolationKind::NotTerminal: return "NotTerminal";
  }
  return "?";
}

Configuration initial_config(const ProblemInstance &instance, const CompDag &dag) {
  Configuration c;
  c.red.assign(static_cast<std::size_t>(instance.k), NodeSet(dag.n()));
  c.blue = NodeSet(dag.n());
  return c;
}

MachineState initial_state(const ProblemInstance &instance, const CompDag &dag) {
  return {initial_config(instance, dag), NodeSet(dag.n())};
}

namespace {

std::string where(int shade, NodeId v) {
  return "shade " + std::to_string(shade) + " node " + std::to_string(v);
}

void check_node(const CompDag &dag, NodeId v) {
  if (v >= dag.n()) throw RangeError("node " + std::to_string(v) + " out of range");
}

void check_placements(const ProblemInstance &instance, const CompDag &dag, const TransitionRule &rule) {
  if (rule.placements.empty()) throw PreconditionError("empty " + to_string(rule.kind) + " step");
  if (rule.placements.size() > static_cast<std::size_t>(instance.k)) {
    throw InjectivityError("more than k placements in one step");
  }
  std::vector<bool> used(static_cast<std::size_t>(instance.k) + 1, false);
  for (const Placement &p : rule.placements) {
    if (p.shade < 1 || p.shade > instance.k) {
      throw RangeError("shade " + std::to_string(p.shade) + " out of range");
    }
    check_node(dag, p.node);
    if (used[p.shade]) throw InjectivityError("shade " + std::to_string(p.shade) + " used twice in one step");
    used[p.shade] = true;
  }
}

void check_budget(const ProblemInstance &instance, const Configuration &c) {
  for (std::size_t j = 0; j < c.red.size(); ++j) {
    if (static_cast<std::int64_t>(c.red[j].count()) > instance.r) {
      throw BudgetError("shade " + std::to_string(j + 1) + " holds " + std::to_string(c.red[j].count()) +
                        " red pebbles, budget " + std::to_string(instance.r));
    }
  }
}

void apply_impl(const ProblemInstance &instance, const CompDag &dag, Configuration &c, NodeSet *computed,
                const TransitionRule &rule) {
  const bool direct = instance.variant == RuleVariant::DirectSend;
  switch (rule.kind) {
    case RuleKind::Save: {
      if (direct) throw VariantError("save is replaced by direct sending in this variant");
      check_placements(instance, dag, rule);
      for (const Placement &p : rule.placements) {
        if (!c.red[p.shade - 1].test(p.node)) throw PreconditionError("save needs a red pebble on " + where(p.shade, p.node));
      }
      for (const Placement &p : rule.placements) c.blue.set(p.node);
      break;
    }
    case RuleKind::Load: {
      if (direct) throw VariantError("load is replaced by direct sending in this variant");
      check_placements(instance, dag, rule);
      for (const Placement &p : rule.placements) {
        if (!c.blue.test(p.node)) throw PreconditionError("load needs a blue pebble on node " + std::to_string(p.node));
      }
      for (const Placement &p : rule.placements) c.red[p.shade - 1].set(p.node);
      break;
    }
    case RuleKind::Compute: {
      check_placements(instance, dag, rule);
      for (const Placement &p : rule.placements) {
        for (NodeId u : dag.preds(p.node)) {
          if (!c.red[p.shade - 1].test(u)) {
            throw PreconditionError("compute of " + where(p.shade, p.node) + " misses predecessor " + std::to_string(u));
          }
        }
      }
      if (instance.variant == RuleVariant::OneShot && computed != nullptr) {
        std::set<NodeId> seen;
        for (const Placement &p : rule.placements) {
          if (computed->test(p.node) || !seen.insert(p.node).second) {
            throw VariantError("node " + std::to_string(p.node) + " computed twice under one-shot");
          }
        }
      }
      for (const Placement &p : rule.placements) {
        c.red[p.shade - 1].set(p.node);
        if (computed != nullptr) computed->set(p.node);
      }
      break;
    }
    case RuleKind::Delete: {
      if (instance.variant == RuleVariant::NoDelete) throw VariantError("delete is not allowed in this variant");
      if (rule.removals.empty()) throw PreconditionError("empty delete step");
      for (const Removal &rm : rule.removals) {
        check_node(dag, rm.node);
        if (rm.shade < 0 || rm.shade > instance.k) throw RangeError("shade " + std::to_string(rm.shade) + " out of range");
        bool has = rm.shade == 0 ? c.blue.test(rm.node) : c.red[rm.shade - 1].test(rm.node);
        if (!has) {
          throw PreconditionError("delete of missing pebble " +
                                  (rm.shade == 0 ? "b:" + std::to_string(rm.node) : where(rm.shade, rm.node)));
        }
        if (rm.shade == 0) {
          c.blue.reset(rm.node);
        } else {
          c.red[rm.shade - 1].reset(rm.node);
        }
      }
      break;
    }
    case RuleKind::DirectComm: {
      if (!direct) throw VariantError("direct sending is only available in the direct-send variant");
      if (rule.transfers.empty()) throw PreconditionError("empty comm step");
      std::set<int> senders, receivers;
      for (const Transfer &t : rule.transfers) {
        if (t.from < 0 || t.from > instance.k || t.to < 0 || t.to > instance.k) {
          throw RangeError("comm endpoint out of range");
        }
        check_node(dag, t.node);
        if (t.from == t.to) throw PreconditionError("comm from an endpoint to itself");
        if (!senders.insert(t.from).second) throw InjectivityError("endpoint sends twice in one comm step");
        if (!receivers.insert(t.to).second) throw InjectivityError("endpoint receives twice in one comm step");
      }
      for (const Transfer &t : rule.transfers) {
        bool has = t.from == 0 ? c.blue.test(t.node) : c.red[t.from - 1].test(t.node);
        if (!has) throw PreconditionError("comm source lacks a pebble on node " + std::to_string(t.node));
      }
      for (const Transfer &t : rule.transfers) {
        if (t.to == 0) {
          c.blue.set(t.node);
        } else {
          c.red[t.to - 1].set(t.node);
        }
      }
      break;
    }
  }
  check_budget(instance, c);
}

}  // namespace

Configuration apply_rule(const ProblemInstance &instance, const CompDag &dag, const Configuration &config,
                         const TransitionRule &rule) {
  Configuration c = config;
  apply_impl(instance, dag, c, nullptr, rule);
  return c;
}

void apply_rule(const ProblemInstance &instance, const CompDag &dag, MachineState &state,
                const TransitionRule &rule) {
  // Work on a copy so a rejected rule leaves the state untouched.
  MachineState next = state;
  apply_impl(instance, dag, next.config, &next.computed, rule);
  state = std::move(next);
}

bool is_terminal(const ProblemInstance &instance, const CompDag &dag, const Configuration &config) {
  for (NodeId s : dag.sinks()) {
    if (config.blue.test(s)) continue;
    if (instance.terminal == TerminalMode::BluePebbleOnSinks) return false;
    bool red = std::any_of(config.red.begin(), config.red.end(), [&](const NodeSet &set) { return set.test(s); });
    if (!red) return false;
  }
  return true;
}

std::int64_t rule_cost(const ProblemInstance &instance, const TransitionRule &rule) {
  switch (rule.kind) {
    case RuleKind::Compute: return 1;
    case RuleKind::Delete: return 0;
    default: return instance.g;
  }
}

bool is_io(const TransitionRule &rule) {
  return rule.kind == RuleKind::Save || rule.kind == RuleKind::Load || rule.kind == RuleKind::DirectComm;
}

std::vector<std::int64_t> cost_prefix(const ProblemInstance &instance, const Strategy &strategy) {
  std::vector<std::int64_t> prefix(strategy.steps.size() + 1, 0);
  for (std::size_t i = 0; i < strategy.steps.size(); ++i) prefix[i + 1] = prefix[i] + rule_cost(instance, strategy.steps[i]);
  return prefix;
}

Rational surplus(std::int64_t total, std::size_t n, int k) {
  return Rational(total) - Rational(static_cast<std::int64_t>(n), k);
}

ValidationReport validate_strategy(const ProblemInstance &instance, const CompDag &dag, const Strategy &strategy) {
  ValidationReport report;
  MachineState state = initial_state(instance, dag);
  CostBreakdown cost;
  auto fail = [&](std::size_t step, ViolationKind kind, std::string reason) {
    report.ok = false;
    report.first_violation = Violation{step, kind, std::move(reason)};
    report.final_config = state.config;
    report.cost = cost;
    return report;
  };
  if (instance.k < 1) return fail(0, ViolationKind::Range, "k must be at least 1");
  if (instance.r < static_cast<std::int64_t>(dag.max_in_degree()) + 1) {
    return fail(0, ViolationKind::Infeasible,
                "r=" + std::to_string(instance.r) + " does not exceed max in-degree " + std::to_string(dag.max_in_degree()));
  }
  for (std::size_t i = 0; i < strategy.steps.size(); ++i) {
    const TransitionRule &rule = strategy.steps[i];
    NodeSet before = state.computed;
    try {
      apply_rule(instance, dag, state, rule);
    } catch (const PreconditionError &e) {
      return fail(i, ViolationKind::Precondition, e.what());
    } catch (const BudgetError &e) {
      return fail(i, ViolationKind::Budget, e.what());
    } catch (const VariantError &e) {
      return fail(i, ViolationKind::Variant, e.what());
    } catch (const InjectivityError &e) {
      return fail(i, ViolationKind::Injectivity, e.what());
    } catch (const RangeError &e) {
      return fail(i, ViolationKind::Range, e.what());
    }
    if (rule.kind == RuleKind::Compute) {
      ++cost.compute_step_count;
      std::set<NodeId> nodes;
      for (const Placement &p : rule.placements) nodes.insert(p.node);
      for (NodeId v : nodes) {
        if (before.test(v)) ++cost.recompute_count;
      }
      // the same node on two shades in one step counts once as new work
      cost.recompute_count += static_cast<std::int64_t>(rule.placements.size() - nodes.size());
    } else if (is_io(rule)) {
      ++cost.io_step_count;
    }
  }
  cost.compute_cost = cost.compute_step_count;
  cost.io_cost = instance.g * cost.io_step_count;
  cost.total = cost.compute_cost + cost.io_cost;
  cost.surplus = surplus(cost.total, dag.n(), instance.k);
  if (!is_terminal(instance, dag, state.config)) {
    return fail(strategy.steps.size(), ViolationKind::NotTerminal, "final configuration does not cover all sinks");
  }
  report.ok = true;
  report.final_config = state.config;
  report.cost = cost;
  return report;
}

CostBreakdown cost_of(const ProblemInstance &instance, const CompDag &dag, const Strategy &strategy) {
  ValidationReport rep = validate_strategy(instance, dag, strategy);
  if (!rep.ok) {
    const Violation &v = *rep.first_violation;
    throw InvalidStrategyError("step " + std::to_string(v.step) + ": " + to_string(v.kind) + ": " + v.reason);
  }
  return rep.cost;
}

Strategy rewrite_direct_send(const ProblemInstance &instance, const CompDag &dag, const Strategy &strategy) {
  const auto &steps = strategy.steps;
  auto loaded_later = [&](std::size_t i, NodeId v) {
    for (std::size_t j = i + 1; j < steps.size(); ++j) {
      if (steps[j].kind == RuleKind::Load) {
        for (const Placement &p : steps[j].placements) {
          if (p.node == v) return true;
        }
      }
    }
    return false;
  };
  Strategy out;
  NodeSet blue(dag.n());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const TransitionRule &rule = steps[i];
    if (rule.kind == RuleKind::Save && i + 1 < steps.size() && steps[i + 1].kind == RuleKind::Load) {
      const TransitionRule &next = steps[i + 1];
      std::map<NodeId, int> saved_by;
      for (const Placement &p : rule.placements) saved_by[p.node] = p.shade;
      bool pairable = next.placements.size() == rule.placements.size();
      std::vector<Transfer> transfers;
      for (const Placement &p : next.placements) {
        auto it = saved_by.find(p.node);
        if (it == saved_by.end() || it->second == p.shade || loaded_later(i + 1, p.node) ||
            (dag.is_sink(p.node) && instance.terminal == TerminalMode::BluePebbleOnSinks)) {
          pairable = false;
          break;
        }
        transfers.push_back({it->second, p.shade, p.node});
        saved_by.erase(it);
      }
      if (pairable && saved_by.empty()) {
        out.steps.push_back(TransitionRule::comm(std::move(transfers)));
        ++i;
        continue;
      }
    }
    if (rule.kind == RuleKind::Save || rule.kind == RuleKind::Load) {
      // slow memory sends or receives one value per step, so these split
      for (const Placement &p : rule.placements) {
        out.steps.push_back(TransitionRule::comm(
            {rule.kind == RuleKind::Save ? Transfer{p.shade, 0, p.node} : Transfer{0, p.shade, p.node}}));
        if (rule.kind == RuleKind::Save) blue.set(p.node);
      }
    } else if (rule.kind == RuleKind::Delete) {
      // blue pebbles skipped by a paired transfer no longer exist
      TransitionRule kept = TransitionRule::remove({});
      for (const Removal &rm : rule.removals) {
        if (rm.shade == 0) {
          if (!blue.test(rm.node)) continue;
          blue.reset(rm.node);
        }
        kept.removals.push_back(rm);
      }
      if (!kept.removals.empty()) out.steps.push_back(std::move(kept));
    } else {
      out.steps.push_back(rule);
    }
  }
  return out;
}

}  // namespace pebble
