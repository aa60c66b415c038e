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
#include <doctest.h>

#include "pebble/errors.hpp"
#include "pebble/generators.hpp"
#include "pebble/oracles.hpp"
#include "pebble/towers.hpp"

using namespace pebble;

namespace {

Graph triangle_with_pendants() { return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}); }

}  // namespace

TEST_CASE("single tower advances") {
  ReductionArtifact same = gen_level_tower({5, 5});
  TowerSearchResult ok = tower_abstract_opt(same, 6);
  CHECK(ok.status == TowerStatus::Feasible);
  CHECK_FALSE(check_progression(same, 6, ok.progression));
  CHECK(tower_abstract_opt(same, 5).status == TowerStatus::Infeasible);
  CHECK(tower_abstract_opt(gen_level_tower({5, 7}), 6).status == TowerStatus::Infeasible);
  CHECK(tower_abstract_opt(gen_level_tower({5, 7}), 7).status == TowerStatus::Feasible);
}

TEST_CASE("progressions turn into zero-I/O strategies") {
  ReductionArtifact a = gen_level_tower({4, 6, 3, 5});
  ProblemInstance i{1, 7, 2};
  TowerSearchResult t = tower_abstract_opt(a, i.r);
  REQUIRE(t.status == TowerStatus::Feasible);
  ValidationReport rep = validate_strategy(i, a.dag, progression_to_strategy(a, i, t.progression));
  CHECK(rep.ok);
  CHECK(rep.cost.io_step_count == 0);
  CHECK(rep.cost.total == static_cast<std::int64_t>(a.dag.n()));
}

TEST_CASE("clique reduction search agrees with brute force on small graphs") {
  ReductionArtifact yes = gen_clique_reduction(triangle_with_pendants(), 3, 1);
  ProblemInstance i = prescribed_instance(yes);
  TowerSearchResult t = tower_abstract_opt(yes, i.r);
  REQUIRE(t.status == TowerStatus::Feasible);
  ValidationReport rep = validate_strategy(i, yes.dag, progression_to_strategy(yes, i, t.progression));
  CHECK(rep.ok);
  CHECK(rep.cost.io_step_count == 0);
  CHECK(rep.cost.surplus == Rational(0));

  ReductionArtifact no = gen_clique_reduction(cycle_graph(5), 3, 1);
  CHECK(tower_abstract_opt(no, prescribed_instance(no).r).status == TowerStatus::Infeasible);
}

TEST_CASE("hand-written clique progression") {
  ReductionArtifact a = gen_clique_reduction(triangle_with_pendants(), 3, 2);
  ProblemInstance i = prescribed_instance(a);
  std::vector<TowerMove> moves = clique_witness_progression(a, {0, 1, 2});
  CHECK_FALSE(check_progression(a, i.r, moves));
  CHECK(check_progression(a, i.r - 1, moves));
  ValidationReport rep = validate_strategy(i, a.dag, progression_to_strategy(a, i, moves));
  CHECK(rep.ok);
  CHECK(rep.cost.io_step_count == 0);
  CHECK_THROWS_AS(clique_witness_progression(a, {0, 1, 3}), WitnessUnavailableError);
}

TEST_CASE("spill search prices I/O") {
  // a single tower never benefits from spilling: the next level must fit on its own
  ReductionArtifact lone = gen_level_tower({5, 7});
  CHECK(tower_min_spill_search(lone, 6, 3, 4).status == TowerStatus::Infeasible);
  CHECK(tower_min_spill_search(lone, 7, 3, 4).io_cost == 0);

  ReductionArtifact a = gen_clique_reduction(cycle_graph(4), 3, 1);
  ProblemInstance i = prescribed_instance(a);
  CHECK(tower_min_spill_search(a, i.r, 3, 0).status == TowerStatus::Infeasible);
  TowerSearchResult one = tower_min_spill_search(a, i.r, 3, 4);
  REQUIRE(one.status == TowerStatus::Feasible);
  CHECK(one.io_cost > 0);
  CHECK(one.io_cost % 3 == 0);
}

TEST_CASE("towers need metadata") {
  CHECK_THROWS_AS(tower_abstract_opt(gen_fig1(), 3), MetadataError);
  CHECK(to_string(TowerMove{TowerMove::Kind::Advance, 2}).size() > 0);
}
