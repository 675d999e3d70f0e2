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

#ifndef GRIDPLAN_TESTS_TEST_UTIL_HPP
#define GRIDPLAN_TESTS_TEST_UTIL_HPP

#include <string>
#include <vector>

#include "gridplan/network.hpp"

namespace gridplan::testing {

inline std::string data_path(const std::string& name) {
  return std::string(GRIDPLAN_DATA_DIR) + "/" + name;
}

// Sources S1..Sk with one link Li: Si -> D of the given slowdown each.
inline Network star(const std::vector<std::int64_t>& slowdowns,
                    std::vector<SharedLinkGroup> groups = {}) {
  std::vector<Site> sites;
  std::vector<Link> links;
  for (std::size_t i = 0; i < slowdowns.size(); ++i) {
    const std::string n = std::to_string(i + 1);
    sites.push_back({"S" + n, std::nullopt});
    links.push_back({"L" + n, "S" + n, "D", slowdowns[i]});
  }
  sites.push_back({"D", std::nullopt});
  return Network(std::move(sites), std::move(links), std::move(groups));
}

// n unit files f1..fn, each held by S1..Sk.
inline Request shared_files(std::size_t n, std::size_t k) {
  Request request{"D", {}};
  for (std::size_t i = 0; i < n; ++i) {
    Demand d{"f" + std::to_string(i + 1), 1, {}};
    for (std::size_t j = 0; j < k; ++j) d.origins.push_back("S" + std::to_string(j + 1));
    request.demands.push_back(std::move(d));
  }
  return request;
}

}  // namespace gridplan::testing

#endif  // GRIDPLAN_TESTS_TEST_UTIL_HPP
