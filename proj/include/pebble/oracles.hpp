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
#include <vector>

#include "pebble/graph.hpp"

namespace pebble {

struct CoverResult {
  int size = 0;
  std::vector<int> cover;  // ascending
};

struct CliqueResult {
  bool exists = false;
  std::vector<int> clique;  // ascending, empty when absent
};

// Exact, by subset enumeration; graphs up to 24 nodes. Ties go to the
// numerically smallest subset mask, so both versions agree exactly.
CoverResult vc_bruteforce(const Graph &g);
CoverResult vc_bruteforce_serial(const Graph &g);

CliqueResult clique_bruteforce(const Graph &g, int q);
CliqueResult clique_bruteforce_serial(const Graph &g, int q);

}  // namespace pebble
