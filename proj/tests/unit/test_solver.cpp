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
#include "pebble/solver.hpp"
#include "pebble/strategies.hpp"

using namespace pebble;

namespace {

CompDag random_small(std::uint64_t seed, int n, int max_in = 2) {
  RandomDagParams p;
  p.n = n;
  p.edge_prob = 0.4;
  p.max_in_degree = max_in;
  p.seed = seed;
  return gen_random_dag(p).dag;
}

void check_witness(const ProblemInstance &i, const CompDag &d, const OptResult &r) {
  REQUIRE(r.status == OptStatus::Optimal);
  ValidationReport rep = validate_strategy(i, d, r.witness);
  CHECK(rep.ok);
  CHECK(rep.cost.total == r.opt_total);
  CHECK(rep.cost.io_step_count == r.opt_io_steps);
}

}  // namespace

TEST_CASE("chain of five") {
  CompDag d = gen_chain(5).dag;
  ProblemInstance i{1, 2, 3};
  OptResult r = exact_opt(i, d);
  check_witness(i, d, r);
  CHECK(r.opt_total == 5);
  CHECK(r.opt_io_steps == 0);
}

TEST_CASE("fig1 optimum is at most the hand-written strategy") {
  ReductionArtifact a = gen_fig1();
  ProblemInstance i{1, 3, 1};
  SearchLimits lim;
  lim.max_n = 16;
  OptResult r = exact_opt(i, a.dag, lim);
  check_witness(i, a.dag, r);
  CHECK(r.opt_total <= cost_of(i, a.dag, witness_strategy(WitnessKind::Fig1_1p, a, i)).total);
}

TEST_CASE("skip chain single copy") {
  ReductionArtifact a = gen_skip_chain(3, 1);
  ProblemInstance i{1, 3, 1};
  OptResult r = exact_opt(i, a.dag);
  check_witness(i, a.dag, r);
  CHECK(r.opt_total <= cost_of({1, 3, 1}, a.dag, witness_strategy(WitnessKind::SkipChain, a, i)).total);
}

TEST_CASE("status codes") {
  CompDag d = gen_chain(5).dag;
  CHECK(exact_opt({1, 1, 1}, d).status == OptStatus::Infeasible);
  SearchLimits small;
  small.max_n = 4;
  CHECK(exact_opt({1, 2, 1}, d, small).status == OptStatus::Exhausted);
  CHECK(exact_opt({3, 2, 1}, d).status == OptStatus::Exhausted);
  SearchLimits few;
  few.max_states = 3;
  CHECK(exact_opt({1, 3, 1}, random_small(3, 9), few).status == OptStatus::Exhausted);
  CHECK_THROWS_AS(exact_opt({2, 2, 1, RuleVariant::DirectSend}, d), VariantError);
}

TEST_CASE("pruned search matches the plain search") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    CompDag d = random_small(seed, 4 + static_cast<int>(seed % 4));
    for (int k : {1, 2}) {
      ProblemInstance i{k, 3, 1 + static_cast<std::int64_t>(seed % 3)};
      OptResult fast = exact_opt(i, d);
      SearchOptions plain;
      plain.dominance = false;
      plain.symmetry = false;
      plain.heuristic = false;
      OptResult slow = exact_opt(i, d, {}, plain);
      OptResult ref = exact_opt_reference(i, d);
      check_witness(i, d, fast);
      check_witness(i, d, ref);
      CHECK(fast.opt_total == slow.opt_total);
      CHECK(fast.opt_total == ref.opt_total);
      CHECK(fast.opt_io_steps == ref.opt_io_steps);
    }
  }
}

TEST_CASE("serial and parallel expansion agree exactly") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    CompDag d = random_small(seed, 9, 3);
    ProblemInstance i{2, 4, 2};
    SearchOptions serial;
    serial.parallel = false;
    OptResult a = exact_opt(i, d), b = exact_opt(i, d, {}, serial);
    CHECK(a.opt_total == b.opt_total);
    CHECK(a.states == b.states);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("variants and terminal modes") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CompDag d = random_small(seed, 6);
    ProblemInstance mpp{2, 3, 2};
    OptResult base = exact_opt(mpp, d);
    for (RuleVariant v : {RuleVariant::OneShot, RuleVariant::NoDelete}) {
      ProblemInstance i = mpp;
      i.variant = v;
      if (v == RuleVariant::NoDelete) i.r = static_cast<std::int64_t>(d.n());
      OptResult r = exact_opt(i, d);
      OptResult ref = exact_opt_reference(i, d);
      check_witness(i, d, r);
      CHECK(r.opt_total == ref.opt_total);
      if (v == RuleVariant::OneShot) CHECK(r.opt_total >= base.opt_total);
    }
    ProblemInstance blue = mpp;
    blue.terminal = TerminalMode::BluePebbleOnSinks;
    OptResult r = exact_opt(blue, d);
    check_witness(blue, d, r);
    CHECK(r.opt_total == exact_opt_reference(blue, d).opt_total);
    CHECK(r.opt_total >= base.opt_total + blue.g);
  }
}

TEST_CASE("minimum I/O objective") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CompDag d = random_small(seed, 8, 3);
    ProblemInstance i{1, 4, 1};
    SearchOptions io;
    io.objective = Objective::MinIo;
    OptResult least_io = exact_opt(i, d, {}, io);
    OptResult least_cost = exact_opt(i, d);
    check_witness(i, d, least_io);
    CHECK(least_io.opt_io_steps <= least_cost.opt_io_steps);
    CHECK(least_io.opt_total >= least_cost.opt_total);
    CHECK(least_io.opt_io_steps == exact_opt_reference(i, d, {}, Objective::MinIo).opt_io_steps);
  }
}

TEST_CASE("optimum respects trivial bounds, transfer bounds and fair splits") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    CompDag d = random_small(seed, 8, 2);
    std::int64_t n = static_cast<std::int64_t>(d.n());
    const int k = 2;
    const std::int64_t r = 3, g = 2;
    ProblemInstance multi{k, r, g};
    OptResult opt = exact_opt(multi, d);
    REQUIRE(opt.status == OptStatus::Optimal);
    BoundResult b = trivial_bounds(n, k, r, g, static_cast<std::int64_t>(d.max_in_degree()));
    CHECK(Rational(opt.opt_total) >= b.lower);
    CHECK(Rational(opt.opt_total) <= *b.upper);

    SearchOptions io;
    io.objective = Objective::MinIo;
    OptResult spp = exact_opt({1, k * r, g}, d, {}, io);
    OptResult mpp_io = exact_opt(multi, d, {}, io);
    CHECK(spp.opt_io_steps <= k * mpp_io.opt_io_steps);
    CHECK(Rational(opt.opt_total) >= transfer_cost_lower_bound(spp.opt_io_steps, n, k, g));

    OptResult single = exact_opt({1, k * r, g}, d);
    CHECK(Rational(opt.opt_total) >= Rational(single.opt_total, k));
  }
}
