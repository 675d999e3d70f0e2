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

#include "gridplan/replay.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gridplan/validate.hpp"

namespace gridplan {
namespace {

struct Hop {
  const ScheduleEntry* entry;
  const Link* link;
};

struct Usage {
  Time start;
  Time end;
  std::int64_t amount;
};

// Earliest time at which the summed usage exceeds `capacity`.
std::optional<std::pair<Time, std::int64_t>> first_overload(
    const std::vector<Usage>& usages, std::int64_t capacity) {
  std::vector<std::pair<Time, std::int64_t>> events;
  for (const auto& u : usages) {
    events.emplace_back(u.start, u.amount);
    events.emplace_back(u.end, -u.amount);
  }
  std::sort(events.begin(), events.end());
  std::int64_t load = 0;
  for (std::size_t i = 0; i < events.size();) {
    const Time t = events[i].first;
    while (i < events.size() && events[i].first == t) load += events[i++].second;
    if (load > capacity) return std::make_pair(t, load);
  }
  return std::nullopt;
}

Violation structural(std::string resource, Time t, std::string message) {
  return {std::move(resource), t, std::move(message)};
}

std::optional<Violation> check(const Schedule& schedule, const Network& network,
                               const Request* request, const ReplayChecks& checks) {
  if (schedule.makespan != compute_makespan(schedule.entries)) {
    return structural("schedule", schedule.makespan,
                      "makespan " + std::to_string(schedule.makespan) +
                          " does not match the latest end " +
                          std::to_string(compute_makespan(schedule.entries)));
  }

  std::map<std::string, std::vector<Hop>> by_demand;
  std::map<std::string, std::int64_t> sizes;
  for (const auto& e : schedule.entries) {
    auto l = network.link_index(e.link);
    if (!l) return structural("link " + e.link, e.start, "unknown link");
    const Link& link = network.link(*l);
    const std::string who = "demand " + e.demand;
    if (e.start < 0 || e.end <= e.start) {
      return structural(who, e.start, "empty or negative interval on " + e.link);
    }
    if ((e.end - e.start) % link.slowdown != 0) {
      return structural(who, e.start,
                        "duration on " + e.link + " is not a multiple of its slowdown");
    }
    const std::int64_t size = (e.end - e.start) / link.slowdown;
    auto [it, fresh] = sizes.emplace(e.demand, size);
    if (!fresh && it->second != size) {
      return structural(who, e.start, "inconsistent size along the path");
    }
    by_demand[e.demand].push_back({&e, &link});
  }

  for (auto& [name, hops] : by_demand) {
    const std::string who = "demand " + name;
    std::sort(hops.begin(), hops.end(), [](const Hop& a, const Hop& b) {
      return a.entry->start < b.entry->start;
    });
    std::set<std::string> visited{hops.front().link->from};
    for (std::size_t k = 0; k < hops.size(); ++k) {
      const Hop& h = hops[k];
      if (!visited.insert(h.link->to).second) {
        return structural(who, h.entry->start,
                          "path revisits site " + h.link->to);
      }
      if (k + 1 == hops.size()) break;
      const Hop& next = hops[k + 1];
      if (next.link->from != h.link->to) {
        return structural(who, next.entry->start,
                          "path is broken between " + h.link->id + " and " +
                              next.link->id);
      }
      if (next.entry->start < h.entry->end) {
        return structural(who, next.entry->start,
                          "leaves " + h.link->to + " before arriving there");
      }
    }
  }

  if (request) {
    const Request planned = drop_satisfied_demands(*request);
    std::set<std::string> expected;
    for (const auto& d : planned.demands) {
      expected.insert(d.name);
      const std::string who = "demand " + d.name;
      auto it = by_demand.find(d.name);
      if (it == by_demand.end()) return structural(who, 0, "never delivered");
      const auto& hops = it->second;
      if (!d.has_origin(hops.front().link->from)) {
        return structural(who, hops.front().entry->start,
                          "path starts at " + hops.front().link->from +
                              ", which is not an origin");
      }
      if (hops.back().link->to != planned.destination) {
        return structural(who, hops.back().entry->end,
                          "path ends at " + hops.back().link->to +
                              ", not at the destination");
      }
      for (const auto& h : hops) {
        if (d.has_origin(h.link->to)) {
          return structural(who, h.entry->start,
                            "path enters origin " + h.link->to);
        }
        if (h.link->from == planned.destination) {
          return structural(who, h.entry->start, "path leaves the destination");
        }
      }
      if (sizes[d.name] != d.size) {
        return structural(who, hops.front().entry->start,
                          "transfer durations do not match size " +
                              std::to_string(d.size));
      }
    }
    for (const auto& [name, hops] : by_demand) {
      if (!expected.count(name)) {
        return structural("demand " + name, hops.front().entry->start,
                          "not part of the request");
      }
    }
  }

  // Resources; keep the earliest overload.
  std::optional<Violation> first;
  auto consider = [&](std::optional<std::pair<Time, std::int64_t>> hit,
                      const std::string& resource, std::int64_t capacity) {
    if (!hit) return;
    if (first && first->time <= hit->first) return;
    first = Violation{resource, hit->first,
                      resource + " carries " + std::to_string(hit->second) +
                          " > capacity " + std::to_string(capacity) + " at t=" +
                          std::to_string(hit->first)};
  };

  std::map<std::string, std::vector<Usage>> per_link;
  for (const auto& e : schedule.entries) {
    per_link[e.link].push_back({e.start, e.end, 1});
  }
  for (const auto& link : network.links()) {
    auto it = per_link.find(link.id);
    if (it != per_link.end()) consider(first_overload(it->second, 1), "link " + link.id, 1);
  }

  if (checks.shared_groups) {
    for (std::size_t g = 0; g < network.shared_groups().size(); ++g) {
      const auto& group = network.shared_groups()[g];
      std::vector<Usage> usages;
      for (const auto& member : group.members) {
        auto l = network.link_index(member);
        auto it = per_link.find(member);
        if (!l || it == per_link.end()) continue;
        const std::int64_t amount = checks.shared_consumption(network.link(*l));
        for (const auto& u : it->second) usages.push_back({u.start, u.end, amount});
      }
      consider(first_overload(usages, group.capacity),
               "shared group #" + std::to_string(g), group.capacity);
    }
  }

  if (checks.storage) {
    std::map<std::string, std::vector<Usage>> held;
    for (const auto& [name, hops] : by_demand) {
      for (std::size_t k = 0; k + 1 < hops.size(); ++k) {
        held[hops[k].link->to].push_back(
            {hops[k].entry->start, hops[k + 1].entry->end, sizes[name]});
      }
    }
    for (const auto& site : network.sites()) {
      auto it = held.find(site.id);
      if (!site.storage || it == held.end()) continue;
      consider(first_overload(it->second, *site.storage), "storage at " + site.id,
               *site.storage);
    }
  }
  return first;
}

}  // namespace

std::optional<Violation> replay(const Schedule& schedule, const Network& network,
                                const ReplayChecks& checks) {
  return check(schedule, network, nullptr, checks);
}

std::optional<Violation> replay(const Schedule& schedule, const Network& network,
                                const Request& request, const ReplayChecks& checks) {
  return check(schedule, network, &request, checks);
}

}  // namespace gridplan
