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
#include "pebble/bounds.hpp"

#include <cmath>

#include "pebble/errors.hpp"

namespace pebble {

BoundResult trivial_bounds(std::int64_t n, int k, std::int64_t r, std::int64_t g, std::int64_t max_in) {
  if (k < 1) throw ParamError("k must be positive");
  if (r <= max_in) {
    throw InfeasibleError("r=" + std::to_string(r) + " cannot hold the inputs of a node with in-degree " +
                          std::to_string(max_in));
  }
  BoundResult b;
  b.lower = Rational(n, k);
  b.upper = Rational((g * (max_in + 1) + 1) * n);
  b.provenance = "compute work split over k processors; sequential load-compute-save per node";
  b.inputs = {{"n", n}, {"k", k}, {"r", r}, {"g", g}, {"max_in", max_in}};
  return b;
}

IoTransfer transfer_io_lower_bound(std::int64_t io_spp, int k) {
  if (k < 1) throw ParamError("k must be positive");
  IoTransfer t;
  t.exact = Rational(io_spp, k);
  t.floor = io_spp / k;
  return t;
}

Rational transfer_cost_lower_bound(std::int64_t io_spp, std::int64_t n, int k, std::int64_t g) {
  if (k < 1) throw ParamError("k must be positive");
  return Rational(g * io_spp, k) + Rational(n, k);
}

double fft_mpp_lower_bound(std::int64_t n, std::int64_t r, int k, std::int64_t g) {
  if (n <= 1) throw DomainError("log n needs n > 1");
  if (r * k <= 1) throw DomainError("log(r*k) needs r*k > 1");
  double ratio = std::log2(static_cast<double>(n)) / std::log2(static_cast<double>(r * k));
  return static_cast<double>(n) / k * (static_cast<double>(g) * ratio + 1.0);
}

RealBound mmm_mpp_lower_bound(std::int64_t n, std::int64_t r, int k, std::int64_t g) {
  if (r * k < 1) throw DomainError("r*k must be positive");
  RealBound b;
  const std::int64_t rk = r * k;
  const double root = std::sqrt(static_cast<double>(rk));
  const double nd = static_cast<double>(n);
  b.value = nd / k * (static_cast<double>(g) * (2.0 * nd * nd / root + nd) + 1.0);
  auto s = static_cast<std::int64_t>(std::llround(root));
  if (s * s == rk) {
    b.exact = Rational(n, k) * (Rational(g) * (Rational(2 * n * n, s) + Rational(n)) + Rational(1));
  }
  return b;
}

std::int64_t greedy_upper_factor(std::int64_t g, std::int64_t max_in) { return 2 * (g * (max_in + 1) + 1); }

}  // namespace pebble
