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

#include <cmath>

#include "pebble/bounds.hpp"
#include "pebble/errors.hpp"

using namespace pebble;

TEST_CASE("trivial bounds") {
  BoundResult b = trivial_bounds(10, 2, 3, 1, 2);
  CHECK(b.lower == Rational(5));
  CHECK(*b.upper == Rational(40));
  BoundResult one = trivial_bounds(1, 1, 1, 1, 0);
  CHECK(one.lower == Rational(1));
  CHECK(*one.upper == Rational(2));
  CHECK(trivial_bounds(7, 2, 3, 1, 1).lower == Rational(7, 2));
  CHECK_THROWS_AS(trivial_bounds(5, 1, 2, 1, 2), InfeasibleError);
}

TEST_CASE("transfer bounds") {
  CHECK(transfer_io_lower_bound(10, 2).exact == Rational(5));
  CHECK(transfer_io_lower_bound(0, 3).exact == Rational(0));
  CHECK(transfer_io_lower_bound(7, 2).floor == 3);
  CHECK(transfer_io_lower_bound(7, 2).exact == Rational(7, 2));
  CHECK(transfer_cost_lower_bound(10, 20, 2, 3) == Rational(25));
  CHECK(transfer_cost_lower_bound(0, 9, 2, 3) == Rational(9, 2));
}

TEST_CASE("fft bound") {
  CHECK(fft_mpp_lower_bound(1024, 32, 2, 1) == doctest::Approx(512.0 * (10.0 / 6.0 + 1.0)));
  CHECK(fft_mpp_lower_bound(256, 16, 1, 3) == doctest::Approx(3.0 * 256 * 8 / 4 + 256));
  CHECK(fft_mpp_lower_bound(1024, 8, 2, 1) > fft_mpp_lower_bound(1024, 64, 2, 1));
  CHECK_THROWS_AS(fft_mpp_lower_bound(1, 4, 1, 1), DomainError);
  CHECK_THROWS_AS(fft_mpp_lower_bound(16, 1, 1, 1), DomainError);
}

TEST_CASE("matrix multiplication bound") {
  RealBound b = mmm_mpp_lower_bound(4, 4, 4, 1);
  REQUIRE(b.exact);
  CHECK(*b.exact == Rational(13));
  CHECK(b.value == doctest::Approx(13.0));
  CHECK(*mmm_mpp_lower_bound(6, 9, 1, 0).exact == Rational(6));
  CHECK_FALSE(mmm_mpp_lower_bound(4, 2, 1, 1).exact);
  double small = mmm_mpp_lower_bound(100, 16, 4, 1).value;
  double large = mmm_mpp_lower_bound(200, 16, 4, 1).value;
  CHECK(large / small == doctest::Approx(8.0).epsilon(0.02));
}

TEST_CASE("greedy factor") {
  CHECK(greedy_upper_factor(1, 2) == 8);
  CHECK(greedy_upper_factor(0, 0) == 2);
}
