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

#ifndef GRIDPLAN_P2P_HPP
#define GRIDPLAN_P2P_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gridplan/network.hpp"
#include "gridplan/schedule.hpp"

namespace gridplan::p2p {

struct TraceEvent {
  enum class Kind { kPick, kDone };

  Time time = 0;
  std::string link;
  Kind kind = Kind::kPick;
  std::string demand;
  // Origin-set size of the picked demand (pick events only).
  std::size_t cardinality = 0;

  bool operator==(const TraceEvent&) const = default;
};

struct SimulationResult {
  Schedule schedule;
  std::vector<TraceEvent> trace;
};

// Peer-to-peer baseline. Every link into the destination has an observer;
// whenever its link is idle it picks, among the remaining demands held at
// the link's source, one with the fewest origins (uniformly at random
// among ties), removes it from every site's list and transfers it.
// Observers with nothing left at their site stay idle.
//
// Throws InputError if some demand has no origin adjacent to the
// destination.
SimulationResult simulate(const Network& network, const Request& request,
                          std::uint64_t seed);

// `t=<time> link=<id> pick=<demand> card=<k>` / `t=<time> link=<id> done=<demand>`
std::string format_event(const TraceEvent& event);
std::string format_trace(std::span<const TraceEvent> trace);

}  // namespace gridplan::p2p

#endif  // GRIDPLAN_P2P_HPP
