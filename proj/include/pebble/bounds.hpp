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

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "pebble/machine.hpp"

namespace pebble {

struct BoundResult {
  Rational lower{0};
  std::optional<Rational> upper;
  std::string provenance;
  std::map<std::string, std::int64_t> inputs;
};

// n/k <= cost <= (g*(max_in+1)+1)*n. Throws InfeasibleError when r <= max_in.
BoundResult trivial_bounds(std::int64_t n, int k, std::int64_t r, std::int64_t g, std::int64_t max_in);

struct IoTransfer {
  Rational exact{0};       // L/k
  std::int64_t floor = 0;  // floor(L/k)
};

// io_spp is the I/O step count of a single-processor strategy with k*r
// fast memory. Any k-processor strategy needs at least io_spp/k I/O steps.
IoTransfer transfer_io_lower_bound(std::int64_t io_spp, int k);
// g*io_spp/k + n/k.
Rational transfer_cost_lower_bound(std::int64_t io_spp, std::int64_t n, int k, std::int64_t g);

// (n/k)*(g*log n/log(r*k) + 1) for the n-point FFT graph. Throws DomainError
// when n <= 1 or r*k <= 1.
double fft_mpp_lower_bound(std::int64_t n, std::int64_t r, int k, std::int64_t g);

struct RealBound {
  double value = 0;
  std::optional<Rational> exact;  // present when r*k is a perfect square
};
// (n/k)*(g*(2n^2/sqrt(r*k) + n) + 1) for n x n matrix multiplication.
RealBound mmm_mpp_lower_bound(std::int64_t n, std::int64_t r, int k, std::int64_t g);

// Factor by which any non-idle greedy compute schedule can exceed the optimum.
std::int64_t greedy_upper_factor(std::int64_t g, std::int64_t max_in);

}  // namespace pebble
