// Copyright 2026 The gridplan Authors
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

#ifndef GRIDPLAN_VALIDATE_HPP
#define GRIDPLAN_VALIDATE_HPP

#include <string>
#include <vector>

#include "gridplan/network.hpp"

namespace gridplan {

enum class Severity {
  kViolation,  // the input cannot be planned as given
  kWarning,    // legal but probably not what was meant
  kNotice,     // informational; e.g. a demand that was dropped
};

struct Issue {
  Severity severity;
  std::string message;
};

struct ValidationResult {
  std::vector<Issue> issues;

  bool ok() const;
  std::vector<std::string> violations() const;
  std::vector<std::string> notices() const;
};

// Structural checks on the network alone.
ValidationResult validate_network(const Network& network);

// Checks on the request alone (names, sizes, origin sets).
ValidationResult validate_request(const Request& request);

// All of the above plus cross checks: destination and origins exist,
// demands already at the destination (notice), and reachability of the
// destination from at least one origin of each demand.
ValidationResult validate(const Network& network, const Request& request);

// Returns `request` without the demands already held at the destination.
Request drop_satisfied_demands(const Request& request);

}  // namespace gridplan

#endif  // GRIDPLAN_VALIDATE_HPP
