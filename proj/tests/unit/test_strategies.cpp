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

#include "pebble/bounds.hpp"
#include "pebble/errors.hpp"
#include "pebble/generators.hpp"
#include "pebble/oracles.hpp"
#include "pebble/solver.hpp"
#include "pebble/strategies.hpp"

using namespace pebble;

TEST_CASE("baseline stays inside the trivial bounds") {
  CompDag chain = gen_chain(4).dag;
  ProblemInstance i{1, 2, 1};
  CostBreakdown c = cost_of(i, chain, baseline_sequential(i, chain));
  CHECK(c.total >= 4);
  CHECK(c.total <= 12);
  CompDag one = gen_chain(1).dag;
  ProblemInstance big_g{1, 1, 5};
  CHECK(cost_of(big_g, one, baseline_sequential(big_g, one)).total <= 6);
  RandomDagParams p;
  p.n = 20;
  p.max_in_degree = 3;
  p.edge_prob = 0.5;
  p.seed = 3;
  CompDag d = gen_random_dag(p).dag;
  ProblemInstance i2{1, 4, 2};
  ValidationReport rep = validate_strategy(i2, d, baseline_sequential(i2, d));
  CHECK(rep.ok);
  CHECK(rep.cost.total <= 9 * 20);
  CHECK_THROWS_AS(baseline_sequential({1, 1, 1}, chain), InfeasibleError);
}

TEST_CASE("greedy follows independent chains without I/O") {
  CompDag d = gen_independent_chains(2, 5).dag;
  ProblemInstance i{2, 2, 1};
  CostBreakdown c = cost_of(i, d, greedy_schedule(i, d));
  CHECK(c.total == 5);
  CHECK(c.io_step_count == 0);
}

TEST_CASE("greedy policies all validate and never recompute") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RandomDagParams p;
    p.n = 25;
    p.seed = seed;
    CompDag d = gen_random_dag(p).dag;
    for (int k : {1, 2, 3}) {
      ProblemInstance i{k, 4, 2};
      for (auto score : {GreedyScore::CountRedInNeighbors, GreedyScore::FractionRedInNeighbors})
        for (auto ev : {Eviction::LRU, Eviction::FarthestNextUse})
          for (auto save : {SavePolicy::OnEvict, SavePolicy::WriteThroughIfNeededLater}) {
            GreedyPolicy pol;
            pol.score = score;
            pol.eviction = ev;
            pol.save_policy = save;
            pol.tie_seed = seed;
            ValidationReport rep = validate_strategy(i, d, greedy_schedule(i, d, pol));
            CHECK(rep.ok);
            CHECK(rep.cost.recompute_count == 0);
          }
    }
  }
}

TEST_CASE("greedy is within its approximation factor of the optimum") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    RandomDagParams p;
    p.n = 8;
    p.edge_prob = 0.35;
    p.max_in_degree = 2;
    p.seed = seed;
    CompDag d = gen_random_dag(p).dag;
    ProblemInstance i{1 + static_cast<int>(seed % 2), 3, 2};
    OptResult opt = exact_opt(i, d);
    REQUIRE(opt.status == OptStatus::Optimal);
    std::int64_t greedy = cost_of(i, d, greedy_schedule(i, d)).total;
    CHECK(greedy <= greedy_upper_factor(i.g, static_cast<std::int64_t>(d.max_in_degree())) * opt.opt_total);
    CHECK(greedy >= opt.opt_total);
  }
}

TEST_CASE("greedy adversarial b at m=4") {
  ReductionArtifact a = gen_greedy_adversarial_b(4, 2);
  ProblemInstance i = prescribed_instance(a);
  std::int64_t n = static_cast<std::int64_t>(a.dag.n());
  std::int64_t greedy = cost_of(i, a.dag, greedy_schedule(i, a.dag)).total;
  std::int64_t witness = cost_of(i, a.dag, witness_strategy(WitnessKind::GreedyAdversarialB, a, i)).total;
  CHECK(Rational(greedy) >= Rational(n, 2) + Rational(n, 3) * Rational(i.g));
  CHECK(witness == n / 2 + 2 * i.g);
}

TEST_CASE("zipper witnesses") {
  ZipperParams p;
  p.d = 2;
  p.n0 = 4;
  ReductionArtifact a = gen_zipper(p);
  ProblemInstance one{1, 6, 1};
  CostBreakdown c1 = cost_of(one, a.dag, witness_strategy(WitnessKind::Zipper1p, a, one));
  CHECK(c1.io_step_count == 0);
  CHECK(c1.total == static_cast<std::int64_t>(a.dag.n()));
  ProblemInstance two{2, 4, 1};
  CostBreakdown c2 = cost_of(two, a.dag, witness_strategy(WitnessKind::Zipper2p, a, two));
  CHECK(c2.io_step_count <= 2 * p.n0);
  CHECK(c2.io_step_count >= 2 * p.n0 - 4);
}

TEST_CASE("skip chain witness") {
  ReductionArtifact a = gen_skip_chain(3, 2);
  ProblemInstance i{2, 3, 1};
  CostBreakdown c = cost_of(i, a.dag, witness_strategy(WitnessKind::SkipChain, a, i));
  CHECK(c.total == 6 + 6);
}

TEST_CASE("vertex cover witness cost formula") {
  ReductionArtifact a = gen_vc_reduction(complete_graph(4), 4, 4, 2);
  ProblemInstance i = prescribed_instance(a);
  CostBreakdown c = cost_of(i, a.dag, witness_strategy(WitnessKind::VcReduction, a, i, {{0, 1, 2}, {}}));
  CHECK(c.total == 300 + (6 * 6 + 4 - 1) * 2 + 2 * 2 * 4 * 3);
  CHECK_THROWS_AS(witness_strategy(WitnessKind::VcReduction, a, i, {{0, 1}, {}}), WitnessUnavailableError);
}

TEST_CASE("witness kinds reject foreign artifacts") {
  ReductionArtifact a = gen_fig1();
  CHECK_THROWS_AS(witness_strategy(WitnessKind::Zipper1p, a, {1, 3, 1}), MismatchError);
  CHECK(parse_witness_kind(to_string(WitnessKind::Fig1_2p)) == WitnessKind::Fig1_2p);
}

TEST_CASE("every witness validates across a parameter grid") {
  for (int d : {2, 3})
    for (int n0 : {4, 7})
      for (std::int64_t g : {1, 3}) {
        ZipperParams p;
        p.d = d;
        p.n0 = n0;
        p.g = g;
        ReductionArtifact z = gen_zipper(p);
        for (std::int64_t r : {std::int64_t{d + 2}, std::int64_t{2 * d + 2}}) {
          ProblemInstance one{1, r, g}, two{2, r, g};
          CHECK(validate_strategy(one, z.dag, witness_strategy(WitnessKind::Zipper1p, z, one)).ok);
          CHECK(validate_strategy(two, z.dag, witness_strategy(WitnessKind::Zipper2p, z, two)).ok);
        }
        ReductionArtifact adv = gen_greedy_adversarial_a(d, g, n0);
        ProblemInstance ai = prescribed_instance(adv);
        CHECK(validate_strategy(ai, adv.dag, witness_strategy(WitnessKind::GreedyAdversarialA, adv, ai)).ok);
      }
  for (int m : {2, 5}) {
    ReductionArtifact s = gen_skip_chain(m, 2);
    ProblemInstance i = prescribed_instance(s);
    CHECK(validate_strategy(i, s.dag, witness_strategy(WitnessKind::SkipChain, s, i)).ok);
    ReductionArtifact b = gen_greedy_adversarial_b(m, 3);
    ProblemInstance bi = prescribed_instance(b);
    CHECK(validate_strategy(bi, b.dag, witness_strategy(WitnessKind::GreedyAdversarialB, b, bi)).ok);
  }
  for (int k : {1, 2, 3}) {
    ReductionArtifact s = gen_subgroup_cycle(k == 1 ? 2 : k, 2 * (k == 1 ? 2 : k), 9);
    ProblemInstance i = prescribed_instance(s);
    CHECK(validate_strategy(i, s.dag, witness_strategy(WitnessKind::SubgroupCycle, s, i)).ok);
  }
  for (int copies : {1, 3}) {
    ReductionArtifact inc = gen_io_tradeoff_increase(copies, 2);
    for (int k : {1, 2}) {
      ProblemInstance i = prescribed_instance(inc);
      i.k = k;
      CHECK(validate_strategy(i, inc.dag, witness_strategy(WitnessKind::IoTradeoffIncrease, inc, i)).ok);
    }
  }
}
