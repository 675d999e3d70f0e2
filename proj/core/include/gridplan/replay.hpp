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

#ifndef GRIDPLAN_REPLAY_HPP
#define GRIDPLAN_REPLAY_HPP

#include <optional>
#include <string>

#include "gridplan/model.hpp"
#include "gridplan/network.hpp"
#include "gridplan/schedule.hpp"

namespace gridplan {

// Which resource constraints to re-check. Link exclusivity, path shape and
// chaining are always checked.
struct ReplayChecks {
  bool storage = true;
  bool shared_groups = true;
  ConsumptionFn shared_consumption = slowdown_consumption;
};

struct Violation {
  // e.g. "link L1", "shared group #0", "storage at Site_3", "demand f2".
  std::string resource;
  Time time = 0;
  std::string message;
};

// Re-checks a finished schedule with plain predicates over its entries
// (no solver code involved). Sizes are recovered from durations. Returns
// the first violation: structural problems first, then the earliest
// resource overload.
std::optional<Violation> replay(const Schedule& schedule, const Network& network,
                                const ReplayChecks& checks = {});

// Same, plus the request-level rules: every demand delivered exactly once
// along a simple path from one of its origins to the destination, never
// entering an origin, with the declared size.
std::optional<Violation> replay(const Schedule& schedule, const Network& network,
                                const Request& request,
                                const ReplayChecks& checks = {});

}  // namespace gridplan

#endif  // GRIDPLAN_REPLAY_HPP
