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

#include <algorithm>
#include <cstdio>

#include "gridplan/bench.hpp"
#include "gridplan/rng.hpp"

namespace gridplan::bench {

const char* to_string(OriginCase c) {
  switch (c) {
    case OriginCase::kDistinct:
      return "distinct";
    case OriginCase::kWeighted:
      return "weighted";
    case OriginCase::kShared:
      return "shared";
  }
  return "?";
}

OriginCase parse_origin_case(std::string_view text) {
  if (text == "distinct") return OriginCase::kDistinct;
  if (text == "weighted") return OriginCase::kWeighted;
  if (text == "shared") return OriginCase::kShared;
  throw InputError("unknown case '" + std::string(text) +
                   "' (expected distinct, weighted or shared)");
}

Network default_network(std::span<const std::int64_t> slowdowns) {
  static constexpr std::int64_t kDefaults[] = {1, 2, 4, 8};
  if (slowdowns.empty()) slowdowns = kDefaults;
  std::vector<Site> sites;
  std::vector<Link> links;
  for (std::size_t i = 0; i < slowdowns.size(); ++i) {
    const std::string n = std::to_string(i + 1);
    sites.push_back({"Site_" + n, std::nullopt});
    links.push_back({"L" + n, "Site_" + n, kDefaultDestination, slowdowns[i]});
  }
  sites.push_back({kDefaultDestination, std::nullopt});
  return Network(std::move(sites), std::move(links));
}

std::vector<std::string> source_sites(const Network& network,
                                      const std::string& destination) {
  std::vector<std::string> out;
  for (const auto& s : network.sites()) {
    if (s.id != destination) out.push_back(s.id);
  }
  return out;
}

Request generate(const ScenarioSpec& spec) {
  const auto sources = source_sites(spec.network, spec.destination);
  if (sources.empty()) throw InputError("scenario: network has no source site");
  if (spec.origin_case == OriginCase::kWeighted) {
    if (spec.weights.size() != sources.size()) {
      throw InputError("scenario: " + std::to_string(spec.weights.size()) +
                       " weights for " + std::to_string(sources.size()) +
                       " source sites");
    }
    const double top = *std::max_element(spec.weights.begin(), spec.weights.end());
    if (top != 1.0) throw InputError("scenario: the largest weight must be 1.0");
    for (double w : spec.weights) {
      if (!(w >= 0.0 && w <= 1.0)) throw InputError("scenario: weights must be in [0, 1]");
    }
  }

  const int width = std::max<int>(3, static_cast<int>(std::to_string(spec.n_files).size()));
  Rng rng(spec.seed);
  Request request{spec.destination, {}};
  for (std::size_t i = 0; i < spec.n_files; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "f%0*zu", width, i + 1);
    Demand demand{name, 1, {}};
    switch (spec.origin_case) {
      case OriginCase::kDistinct:
        demand.origins.push_back(sources[uniform_index(rng, sources.size())]);
        break;
      case OriginCase::kWeighted:
        for (std::size_t s = 0; s < sources.size(); ++s) {
          // One draw per site keeps the stream aligned across weights.
          const double u = uniform_unit(rng);
          if (spec.weights[s] >= 1.0 || u < spec.weights[s]) {
            demand.origins.push_back(sources[s]);
          }
        }
        break;
      case OriginCase::kShared:
        demand.origins = sources;
        break;
    }
    request.demands.push_back(std::move(demand));
  }
  return request;
}

}  // namespace gridplan::bench
