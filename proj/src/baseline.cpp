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
#include "pebble/errors.hpp"
#include "pebble/strategies.hpp"

namespace pebble {

Strategy baseline_sequential(const ProblemInstance &instance, const CompDag &dag) {
  if (instance.r <= static_cast<std::int64_t>(dag.max_in_degree())) {
    throw InfeasibleError("r=" + std::to_string(instance.r) + " cannot hold a node and its " +
                          std::to_string(dag.max_in_degree()) + " inputs");
  }
  if (instance.variant == RuleVariant::NoDelete && dag.n() > static_cast<std::size_t>(instance.r)) {
    throw VariantError("the baseline clears fast memory after every node");
  }
  ProblemInstance plain = instance;
  if (plain.variant == RuleVariant::DirectSend) plain.variant = RuleVariant::Mpp;
  StrategyBuilder b(plain, dag);
  for (NodeId v : dag.topo_order()) {
    for (NodeId u : dag.preds(v)) b.load(1, u);
    b.compute(1, v);
    b.save(1, v);
    if (instance.variant != RuleVariant::NoDelete) b.drop_all_except(1);
  }
  Strategy s = b.take();
  if (instance.variant == RuleVariant::DirectSend) return rewrite_direct_send(instance, dag, s);
  return s;
}

}  // namespace pebble
