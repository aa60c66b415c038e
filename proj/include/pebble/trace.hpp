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

#include <string>

#include "pebble/machine.hpp"

namespace pebble {

// One step per line:
//   compute 1:5 2:7
//   save 1:3        load 2:3
//   delete r1:5 b:3
//   comm p1->p2:4 M->p1:5
std::string serialize_strategy(const Strategy &strategy);
Strategy parse_strategy(const std::string &text);

std::string format_rule(const TransitionRule &rule);

}  // namespace pebble
