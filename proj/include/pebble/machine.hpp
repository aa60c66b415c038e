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

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pebble/dag.hpp"

namespace pebble {

using Rational = boost::rational<std::int64_t>;
using NodeSet = boost::dynamic_bitset<std::uint64_t>;

std::string to_string(const Rational &q);

enum class RuleVariant { Mpp, OneShot, NoDelete, DirectSend };
enum class TerminalMode { AnyPebbleOnSinks, BluePebbleOnSinks };

std::string to_string(RuleVariant v);
RuleVariant parse_variant(const std::string &s);
std::string to_string(TerminalMode t);
TerminalMode parse_terminal_mode(const std::string &s);

struct ProblemInstance {
  int k = 1;
  std::int64_t r = 1;
  std::int64_t g = 1;
  RuleVariant variant = RuleVariant::Mpp;
  TerminalMode terminal = TerminalMode::AnyPebbleOnSinks;
};

struct Configuration {
  std::vector<NodeSet> red;  // red[j] for shade j+1
  NodeSet blue;
  bool operator==(const Configuration &) const = default;
};

enum class RuleKind { Save, Load, Compute, Delete, DirectComm };
std::string to_string(RuleKind k);

// Shades are 1-based throughout.
struct Placement {
  int shade = 1;
  NodeId node = 0;
  bool operator==(const Placement &) const = default;
};

// shade 0 names the blue pebble.
struct Removal {
  int shade = 0;
  NodeId node = 0;
  bool operator==(const Removal &) const = default;
};

// Endpoint 0 is slow memory, 1..k are processors.
struct Transfer {
  int from = 0;
  int to = 0;
  NodeId node = 0;
  bool operator==(const Transfer &) const = default;
};

struct TransitionRule {
  RuleKind kind = RuleKind::Compute;
  std::vector<Placement> placements;  // Save, Load, Compute
  std::vector<Removal> removals;      // Delete
  std::vector<Transfer> transfers;    // DirectComm

  static TransitionRule compute(std::vector<Placement> p) { return {RuleKind::Compute, std::move(p), {}, {}}; }
  static TransitionRule save(std::vector<Placement> p) { return {RuleKind::Save, std::move(p), {}, {}}; }
  static TransitionRule load(std::vector<Placement> p) { return {RuleKind::Load, std::move(p), {}, {}}; }
  static TransitionRule remove(std::vector<Removal> r) { return {RuleKind::Delete, {}, std::move(r), {}}; }
  static TransitionRule comm(std::vector<Transfer> t) { return {RuleKind::DirectComm, {}, {}, std::move(t)}; }

  bool operator==(const TransitionRule &) const = default;
};

struct Strategy {
  std::vector<TransitionRule> steps;
  bool operator==(const Strategy &) const = default;
};

struct CostBreakdown {
  std::int64_t compute_cost = 0;
  std::int64_t io_cost = 0;
  std::int64_t total = 0;
  Rational surplus{0};
  std::int64_t io_step_count = 0;
  std::int64_t compute_step_count = 0;
  std::int64_t recompute_count = 0;
  bool operator==(const CostBreakdown &) const = default;
};

enum class ViolationKind { Precondition, Budget, Variant, Injectivity, Range, Infeasible, NotTerminal };
std::string to_string(ViolationKind k);

struct Violation {
  std::size_t step = 0;  // index of the failing step; steps.size() for terminal failures
  ViolationKind kind = ViolationKind::Precondition;
  std::string reason;
  bool operator==(const Violation &) const = default;
};

struct ValidationReport {
  bool ok = false;
  std::optional<Violation> first_violation;
  Configuration final_config;
  CostBreakdown cost;
  bool operator==(const ValidationReport &) const = default;
};

// Configuration plus the set of nodes computed so far (needed for one-shot).
struct MachineState {
  Configuration config;
  NodeSet computed;
};

Configuration initial_config(const ProblemInstance &instance, const CompDag &dag);
MachineState initial_state(const ProblemInstance &instance, const CompDag &dag);

// Throws PreconditionError, BudgetError, VariantError, InjectivityError, RangeError.
Configuration apply_rule(const ProblemInstance &instance, const CompDag &dag, const Configuration &config,
                         const TransitionRule &rule);
// Same, in place, with one-shot history tracking.
void apply_rule(const ProblemInstance &instance, const CompDag &dag, MachineState &state,
                const TransitionRule &rule);

bool is_terminal(const ProblemInstance &instance, const CompDag &dag, const Configuration &config);

ValidationReport validate_strategy(const ProblemInstance &instance, const CompDag &dag,
                                   const Strategy &strategy);

// Throws InvalidStrategyError when the strategy does not validate.
CostBreakdown cost_of(const ProblemInstance &instance, const CompDag &dag, const Strategy &strategy);

std::int64_t rule_cost(const ProblemInstance &instance, const TransitionRule &rule);
bool is_io(const TransitionRule &rule);
// prefix[i] = cost of steps [0, i). Size steps.size() + 1.
std::vector<std::int64_t> cost_prefix(const ProblemInstance &instance, const Strategy &strategy);

Rational surplus(std::int64_t total, std::size_t n, int k);

// Rewrites Save/Load steps as direct-sending steps. A Save immediately
// followed by a Load of the same nodes on other shades becomes one
// processor-to-processor step when the blue copy is never used afterwards;
// every other Save/Load becomes a transfer to/from slow memory.
Strategy rewrite_direct_send(const ProblemInstance &instance, const CompDag &dag, const Strategy &strategy);

}  // namespace pebble
