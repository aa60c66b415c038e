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

#include <cstddef>
#include <cstdint>
#include <string>

#include "pebble/machine.hpp"

namespace pebble {

enum class OptStatus { Optimal, Exhausted, Infeasible };
std::string to_string(OptStatus s);

enum class Objective {
  MinCost,  // least total cost, ties broken by fewest I/O steps
  MinIo,    // fewest I/O steps, ties broken by least total cost
};

struct SearchLimits {
  std::size_t max_states = 5'000'000;
  double max_seconds = 300.0;
  std::size_t max_n = 12;
  int max_k = 2;
};

// Hard caps regardless of limits: states are packed into 64-bit masks.
inline constexpr std::size_t kSolverMaxNodes = 64;
inline constexpr int kSolverMaxShades = 4;

struct SearchOptions {
  Objective objective = Objective::MinCost;
  bool dominance = true;  // skip states whose blue set is covered by a settled state at no greater distance
  bool symmetry = true;   // treat processors as interchangeable
  bool heuristic = true;  // admissible compute-count estimate
  bool parallel = true;   // expand equal-key batches with OpenMP
};

struct OptResult {
  OptStatus status = OptStatus::Exhausted;
  std::int64_t opt_total = 0;
  std::int64_t opt_io_steps = 0;
  Strategy witness;
  std::size_t states = 0;
  std::string reason;
};

// Exact optimum by best-first search over configurations. Deletions are
// folded into placements: a full shade drops one pebble to make room.
// Not available for the direct-send variant (throws VariantError).
OptResult exact_opt(const ProblemInstance &instance, const CompDag &dag, const SearchLimits &limits = {},
                    const SearchOptions &options = {});

// Plain uniform-cost search with explicit zero-cost deletions and no
// pruning of any kind. Slow; meant as a cross-check on small inputs.
OptResult exact_opt_reference(const ProblemInstance &instance, const CompDag &dag, const SearchLimits &limits = {},
                              Objective objective = Objective::MinCost);

}  // namespace pebble
