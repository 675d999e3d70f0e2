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

#ifndef GRIDPLAN_NETWORK_HPP
#define GRIDPLAN_NETWORK_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gridplan {

// Discrete time, in the same unit as file size x slowdown.
using Time = std::int64_t;

// Thrown for malformed input files and failed validation. The message
// carries the offending field or line.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Site {
  std::string id;
  // File-size units of free space; nullopt means unbounded.
  std::optional<std::int64_t> storage;
};

struct Link {
  std::string id;
  std::string from;
  std::string to;
  // Time units needed per file-size unit.
  std::int64_t slowdown = 1;
};

// Links behind a common router. The group is a cumulative resource of the
// given capacity; each active transfer on a member consumes an amount
// decided by the solver's consumption hook (slowdown by default).
struct SharedLinkGroup {
  std::vector<std::string> members;
  std::int64_t capacity = 1;
};

// Directed multigraph of sites. Immutable once constructed; index lookups
// are built eagerly so that the CP model can work with dense indices.
//
// Construction never throws, even for inconsistent input (dangling link
// endpoints are skipped in the incidence lists). Use validate_network() to
// list problems, or the loaders in io.hpp which reject invalid networks.
class Network {
 public:
  Network() = default;
  Network(std::vector<Site> sites, std::vector<Link> links,
          std::vector<SharedLinkGroup> shared_groups = {});

  const std::vector<Site>& sites() const { return sites_; }
  const std::vector<Link>& links() const { return links_; }
  const std::vector<SharedLinkGroup>& shared_groups() const {
    return shared_groups_;
  }

  std::optional<std::size_t> site_index(std::string_view id) const;
  std::optional<std::size_t> link_index(std::string_view id) const;
  const Site& site(std::size_t index) const { return sites_[index]; }
  const Link& link(std::size_t index) const { return links_[index]; }

  // Endpoint indices of link `index`; only meaningful for links whose
  // endpoints exist.
  std::size_t link_from(std::size_t index) const { return link_from_[index]; }
  std::size_t link_to(std::size_t index) const { return link_to_[index]; }

  // Link indices leaving / entering a site, in declaration order.
  std::span<const std::size_t> out_link_indices(std::size_t site) const {
    return out_[site];
  }
  std::span<const std::size_t> in_link_indices(std::size_t site) const {
    return in_[site];
  }

  // Incidence sets by id. Throw InputError for an unknown site.
  std::vector<Link> out_links(std::string_view site) const;
  std::vector<Link> in_links(std::string_view site) const;

 private:
  std::vector<Site> sites_;
  std::vector<Link> links_;
  std::vector<SharedLinkGroup> shared_groups_;
  std::unordered_map<std::string, std::size_t> site_by_id_;
  std::unordered_map<std::string, std::size_t> link_by_id_;
  std::vector<std::size_t> link_from_;
  std::vector<std::size_t> link_to_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

// A named file needed at the destination.
struct Demand {
  std::string name;
  std::int64_t size = 1;
  std::vector<std::string> origins;

  bool has_origin(std::string_view site) const;
};

struct Request {
  std::string destination;
  std::vector<Demand> demands;
};

inline Time transfer_duration(const Demand& demand, const Link& link) {
  return demand.size * link.slowdown;
}

}  // namespace gridplan

#endif  // GRIDPLAN_NETWORK_HPP
