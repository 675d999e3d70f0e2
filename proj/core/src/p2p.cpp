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

#include "gridplan/p2p.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "gridplan/rng.hpp"
#include "gridplan/validate.hpp"

namespace gridplan::p2p {
namespace {

struct Observer {
  std::size_t link;
  std::string source;
  std::optional<Time> busy_until;
  std::size_t demand = 0;
};

}  // namespace

SimulationResult simulate(const Network& network, const Request& request,
                          std::uint64_t seed) {
  const Request planned = drop_satisfied_demands(request);
  auto dest = network.site_index(planned.destination);
  if (!dest) {
    throw InputError("destination '" + planned.destination + "' is not a site");
  }

  std::vector<Observer> observers;
  for (std::size_t l : network.in_link_indices(*dest)) {
    observers.push_back({l, network.link(l).from, std::nullopt});
  }
  for (const auto& d : planned.demands) {
    bool adjacent = std::any_of(observers.begin(), observers.end(),
                                [&](const Observer& o) { return d.has_origin(o.source); });
    if (!adjacent) {
      throw InputError("demand '" + d.name +
                       "' has no origin adjacent to the destination; "
                       "P2P requires direct connections");
    }
  }

  Rng rng(seed);
  SimulationResult result;
  std::vector<bool> remaining(planned.demands.size(), true);
  std::size_t left = planned.demands.size();
  Time clock = 0;
  std::vector<std::size_t> ties;

  while (true) {
    for (auto& o : observers) {
      if (o.busy_until && *o.busy_until == clock) {
        result.trace.push_back({clock, network.link(o.link).id,
                                TraceEvent::Kind::kDone,
                                planned.demands[o.demand].name, 0});
        o.busy_until.reset();
      }
    }
    for (auto& o : observers) {
      if (o.busy_until || left == 0) continue;
      std::size_t best = std::numeric_limits<std::size_t>::max();
      ties.clear();
      for (std::size_t d = 0; d < planned.demands.size(); ++d) {
        if (!remaining[d] || !planned.demands[d].has_origin(o.source)) continue;
        const std::size_t card = planned.demands[d].origins.size();
        if (card < best) {
          best = card;
          ties.clear();
        }
        if (card == best) ties.push_back(d);
      }
      if (ties.empty()) continue;
      const std::size_t pick =
          ties.size() == 1 ? ties.front() : ties[uniform_index(rng, ties.size())];
      remaining[pick] = false;
      --left;
      const Demand& demand = planned.demands[pick];
      const Link& link = network.link(o.link);
      const Time end = clock + transfer_duration(demand, link);
      result.trace.push_back(
          {clock, link.id, TraceEvent::Kind::kPick, demand.name, best});
      result.schedule.entries.push_back({demand.name, link.id, clock, end});
      o.busy_until = end;
      o.demand = pick;
    }

    std::optional<Time> next;
    for (const auto& o : observers) {
      if (o.busy_until && (!next || *o.busy_until < *next)) next = o.busy_until;
    }
    if (!next) break;
    clock = *next;
  }
  if (left != 0) throw std::logic_error("p2p simulation stalled");
  normalize(result.schedule);
  return result;
}

std::string format_event(const TraceEvent& event) {
  std::string line = "t=" + std::to_string(event.time) + " link=" + event.link;
  if (event.kind == TraceEvent::Kind::kPick) {
    line += " pick=" + event.demand + " card=" + std::to_string(event.cardinality);
  } else {
    line += " done=" + event.demand;
  }
  return line;
}

std::string format_trace(std::span<const TraceEvent> trace) {
  std::string out;
  for (const auto& e : trace) out += format_event(e) + "\n";
  return out;
}

}  // namespace gridplan::p2p
