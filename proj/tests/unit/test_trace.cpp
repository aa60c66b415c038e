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
#include "pebble/strategies.hpp"
#include "pebble/trace.hpp"

using namespace pebble;

TEST_CASE("trace text round trip") {
  Strategy s{{TransitionRule::compute({{1, 5}, {2, 7}}), TransitionRule::save({{1, 3}}),
              TransitionRule::load({{2, 3}}), TransitionRule::remove({{1, 5}, {0, 3}}),
              TransitionRule::comm({{1, 2, 4}, {0, 1, 5}})}};
  std::string text = serialize_strategy(s);
  CHECK(text.find("compute 1:5 2:7") != std::string::npos);
  CHECK(text.find("delete r1:5 b:3") != std::string::npos);
  CHECK(text.find("comm p1->p2:4 M->p1:5") != std::string::npos);
  CHECK(parse_strategy(text) == s);
}

TEST_CASE("witness traces survive serialization") {
  ReductionArtifact a = gen_fig1();
  ProblemInstance i{2, 3, 1};
  Strategy s = witness_strategy(WitnessKind::Fig1_2p, a, i);
  CHECK(parse_strategy(serialize_strategy(s)) == s);
}

TEST_CASE("trace parse errors") {
  CHECK_THROWS_AS(parse_strategy("compute 1-5\n"), ParseError);
  CHECK_THROWS_AS(parse_strategy("fly 1:5\n"), ParseError);
  CHECK_THROWS_AS(parse_strategy("delete x1:5\n"), ParseError);
  CHECK_THROWS_AS(parse_strategy("comm p1:4\n"), ParseError);
  CHECK(parse_strategy("# nothing\n\n").steps.empty());
}
