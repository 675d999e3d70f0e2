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

#ifndef GRIDPLAN_DOMAINS_HPP
#define GRIDPLAN_DOMAINS_HPP

#include <cstdint>
#include <vector>

#include "gridplan/network.hpp"

namespace gridplan {

// Value of a {0,1} variable during search.
enum class Tri : std::int8_t { kFalse = 0, kTrue = 1, kUnknown = 2 };

// The full search state of a transfer model. A "slot" is one (demand,
// link) pair; it owns a routing variable (is the demand sent over the
// link?) and a start-time variable with interval domain [lo, hi]. The
// start domain only matters while the routing variable may still be 1:
// emptying it forces routing to 0, and is a conflict only once routing
// is 1.
//
// Channel variables are the AND of an incoming and an outgoing slot of
// one demand at a transit site; they drive storage consumption.
struct Domains {
  std::vector<Tri> routed;
  std::vector<Time> lo;
  std::vector<Time> hi;
  std::vector<Tri> channel;
  // Every routed transfer must end by this time.
  Time bound = 0;

  std::size_t slot_count() const { return routed.size(); }
  bool possible(std::size_t s) const { return routed[s] != Tri::kFalse; }
  bool chosen(std::size_t s) const { return routed[s] == Tri::kTrue; }

  // Domain updates. Each returns false on conflict and sets `changed`
  // when the domain actually shrank.
  bool fix_routed(std::size_t s, bool value, bool& changed);
  bool raise_start(std::size_t s, Time value, bool& changed);
  bool lower_start(std::size_t s, Time value, bool& changed);
  bool fix_channel(std::size_t c, bool value, bool& changed);
};

}  // namespace gridplan

#endif  // GRIDPLAN_DOMAINS_HPP
