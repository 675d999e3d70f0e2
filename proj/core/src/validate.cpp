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

#include "gridplan/validate.hpp"

#include <deque>
#include <set>

namespace gridplan {

bool ValidationResult::ok() const {
  for (const auto& issue : issues) {
    if (issue.severity == Severity::kViolation) return false;
  }
  return true;
}

std::vector<std::string> ValidationResult::violations() const {
  std::vector<std::string> out;
  for (const auto& issue : issues) {
    if (issue.severity == Severity::kViolation) out.push_back(issue.message);
  }
  return out;
}

std::vector<std::string> ValidationResult::notices() const {
  std::vector<std::string> out;
  for (const auto& issue : issues) {
    if (issue.severity != Severity::kViolation) out.push_back(issue.message);
  }
  return out;
}

namespace {

void violation(ValidationResult& r, std::string msg) {
  r.issues.push_back({Severity::kViolation, std::move(msg)});
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace

ValidationResult validate_network(const Network& network) {
  ValidationResult r;
  std::set<std::string> site_ids;
  for (const auto& site : network.sites()) {
    if (site.id.empty()) violation(r, "site with empty id");
    if (!site_ids.insert(site.id).second) {
      violation(r, "duplicate site id " + quoted(site.id));
    }
    if (site.storage && *site.storage < 1) {
      violation(r, "site " + quoted(site.id) + ": storage must be >= 1");
    }
  }
  std::set<std::string> link_ids;
  for (const auto& link : network.links()) {
    const std::string where = "link " + quoted(link.id);
    if (link.id.empty()) violation(r, "link with empty id");
    if (!link_ids.insert(link.id).second) {
      violation(r, "duplicate link id " + quoted(link.id));
    }
    if (!site_ids.count(link.from)) {
      violation(r, where + ": unknown from-site " + quoted(link.from));
    }
    if (!site_ids.count(link.to)) {
      violation(r, where + ": unknown to-site " + quoted(link.to));
    }
    if (link.from == link.to) violation(r, where + ": from == to");
    if (link.slowdown < 1) violation(r, where + ": slowdown must be >= 1");
  }
  for (std::size_t g = 0; g < network.shared_groups().size(); ++g) {
    const auto& group = network.shared_groups()[g];
    const std::string where = "shared group #" + std::to_string(g);
    if (group.members.size() < 2) {
      violation(r, where + ": needs at least 2 members");
    }
    if (group.capacity < 1) violation(r, where + ": capacity must be >= 1");
    std::set<std::string> seen;
    std::int64_t total = 0;
    for (const auto& member : group.members) {
      if (!seen.insert(member).second) {
        violation(r, where + ": duplicate member " + quoted(member));
      }
      if (auto l = network.link_index(member)) {
        total += network.link(*l).slowdown;
      } else {
        violation(r, where + ": unknown member link " + quoted(member));
      }
    }
    if (group.capacity >= total && total > 0) {
      r.issues.push_back({Severity::kWarning,
                          where + ": capacity covers all members; the group "
                                  "never constrains anything"});
    }
  }
  return r;
}

ValidationResult validate_request(const Request& request) {
  ValidationResult r;
  if (request.destination.empty()) violation(r, "request has no destination");
  std::set<std::string> names;
  for (const auto& demand : request.demands) {
    const std::string where = "demand " + quoted(demand.name);
    if (demand.name.empty()) violation(r, "demand with empty name");
    if (!names.insert(demand.name).second) {
      violation(r, "duplicate demand name " + quoted(demand.name));
    }
    if (demand.size < 1) violation(r, where + ": size must be >= 1");
    if (demand.origins.empty()) violation(r, where + ": no origins");
    std::set<std::string> seen;
    for (const auto& o : demand.origins) {
      if (!seen.insert(o).second) {
        violation(r, where + ": duplicate origin " + quoted(o));
      }
    }
  }
  return r;
}

ValidationResult validate(const Network& network, const Request& request) {
  ValidationResult r = validate_network(network);
  auto req = validate_request(request);
  r.issues.insert(r.issues.end(), req.issues.begin(), req.issues.end());

  auto dest = network.site_index(request.destination);
  if (!request.destination.empty() && !dest) {
    violation(r, "destination " + quoted(request.destination) +
                     " is not a site of the network");
  }

  // Sites that can reach the destination, by reverse BFS.
  std::vector<bool> reaches(network.sites().size(), false);
  if (dest) {
    std::deque<std::size_t> queue{*dest};
    reaches[*dest] = true;
    while (!queue.empty()) {
      std::size_t s = queue.front();
      queue.pop_front();
      for (std::size_t l : network.in_link_indices(s)) {
        std::size_t from = network.link_from(l);
        if (!reaches[from]) {
          reaches[from] = true;
          queue.push_back(from);
        }
      }
    }
  }

  for (const auto& demand : request.demands) {
    const std::string where = "demand " + quoted(demand.name);
    bool any_known = false;
    bool any_reaches = false;
    for (const auto& o : demand.origins) {
      auto idx = network.site_index(o);
      if (!idx) {
        violation(r, where + ": unknown origin site " + quoted(o));
        continue;
      }
      any_known = true;
      if (reaches[*idx]) any_reaches = true;
    }
    if (!dest) continue;
    if (demand.has_origin(request.destination)) {
      r.issues.push_back(
          {Severity::kNotice, where + ": already at destination, dropped"});
      continue;
    }
    if (any_known && !any_reaches) {
      violation(r, where + ": unreachable, no origin has a path to " +
                       quoted(request.destination));
    }
  }
  return r;
}

Request drop_satisfied_demands(const Request& request) {
  Request out{request.destination, {}};
  for (const auto& demand : request.demands) {
    if (!demand.has_origin(request.destination)) out.demands.push_back(demand);
  }
  return out;
}

}  // namespace gridplan
