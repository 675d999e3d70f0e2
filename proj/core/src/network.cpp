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

#include "gridplan/network.hpp"

#include <algorithm>

namespace gridplan {

Network::Network(std::vector<Site> sites, std::vector<Link> links,
                 std::vector<SharedLinkGroup> shared_groups)
    : sites_(std::move(sites)),
      links_(std::move(links)),
      shared_groups_(std::move(shared_groups)),
      out_(sites_.size()),
      in_(sites_.size()) {
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    site_by_id_.emplace(sites_[i].id, i);  // first occurrence wins
  }
  link_from_.assign(links_.size(), sites_.size());
  link_to_.assign(links_.size(), sites_.size());
  for (std::size_t i = 0; i < links_.size(); ++i) {
    link_by_id_.emplace(links_[i].id, i);
    auto from = site_index(links_[i].from);
    auto to = site_index(links_[i].to);
    if (!from || !to) continue;
    link_from_[i] = *from;
    link_to_[i] = *to;
    out_[*from].push_back(i);
    in_[*to].push_back(i);
  }
}

std::optional<std::size_t> Network::site_index(std::string_view id) const {
  auto it = site_by_id_.find(std::string(id));
  if (it == site_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Network::link_index(std::string_view id) const {
  auto it = link_by_id_.find(std::string(id));
  if (it == link_by_id_.end()) return std::nullopt;
  return it->second;
}

std::vector<Link> Network::out_links(std::string_view site) const {
  auto index = site_index(site);
  if (!index) throw InputError("unknown site '" + std::string(site) + "'");
  std::vector<Link> result;
  for (std::size_t l : out_[*index]) result.push_back(links_[l]);
  return result;
}

std::vector<Link> Network::in_links(std::string_view site) const {
  auto index = site_index(site);
  if (!index) throw InputError("unknown site '" + std::string(site) + "'");
  std::vector<Link> result;
  for (std::size_t l : in_[*index]) result.push_back(links_[l]);
  return result;
}

bool Demand::has_origin(std::string_view site) const {
  return std::find(origins.begin(), origins.end(), site) != origins.end();
}

}  // namespace gridplan
