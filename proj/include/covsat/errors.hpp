// covsat: constructing and verifying short covering codes and saturating sets.
//
// Copyright 2026 The covsat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace covsat {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a requested computation exceeds a configured resource cap
/// (syndrome-space size, field order, matrix width, ...).  The CLI maps this
/// to its own exit code so capped runs are distinguishable from mismatches.
class cap_error : public error {
 public:
  using error::error;
};

/// Raised when inputs are structurally invalid (bad parameters, malformed
/// files, violated preconditions).
class invalid_argument_error : public error {
 public:
  using error::error;
};

/// Raised by generators that refuse to build an object because a measured
/// precondition failed (e.g. a seed that is not surface covering).
class refusal_error : public error {
 public:
  using error::error;
};

}  // namespace covsat
