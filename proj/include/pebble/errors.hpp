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

#include <stdexcept>
#include <string>

namespace pebble {

class PebbleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PEBBLE_DEFINE_ERROR(Name)                  \
  class Name : public PebbleError {                \
   public:                                         \
    using PebbleError::PebbleError;                \
  };

// DAG construction
PEBBLE_DEFINE_ERROR(CycleError)
PEBBLE_DEFINE_ERROR(RangeError)
PEBBLE_DEFINE_ERROR(DuplicateEdgeError)
PEBBLE_DEFINE_ERROR(NotASourceError)
PEBBLE_DEFINE_ERROR(ParseError)

// rule engine
PEBBLE_DEFINE_ERROR(PreconditionError)
PEBBLE_DEFINE_ERROR(BudgetError)
PEBBLE_DEFINE_ERROR(VariantError)
PEBBLE_DEFINE_ERROR(InjectivityError)
PEBBLE_DEFINE_ERROR(InvalidStrategyError)
PEBBLE_DEFINE_ERROR(InfeasibleError)

// generators and witnesses
PEBBLE_DEFINE_ERROR(ParamError)
PEBBLE_DEFINE_ERROR(NotCubicError)
PEBBLE_DEFINE_ERROR(DivisibilityError)
PEBBLE_DEFINE_ERROR(WitnessUnavailableError)
PEBBLE_DEFINE_ERROR(MismatchError)
PEBBLE_DEFINE_ERROR(MetadataError)

// bounds
PEBBLE_DEFINE_ERROR(DomainError)

#undef PEBBLE_DEFINE_ERROR

}  // namespace pebble
