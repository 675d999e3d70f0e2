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

#include "gridplan/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gridplan/validate.hpp"

namespace gridplan {

void add_symmetry_breaking(Model& model) {
  if (model.config().allow_transit) return;
  const auto& demands = model.request().demands;

  // Group demands by (sorted origins, size), keeping request order.
  std::map<std::pair<std::vector<std::string>, std::int64_t>,
           std::vector<std::size_t>>
      groups;
  for (std::size_t d = 0; d < demands.size(); ++d) {
    auto origins = demands[d].origins;
    std::sort(origins.begin(), origins.end());
    groups[{origins, demands[d].size}].push_back(d);
  }
  for (const auto& [key, members] : groups) {
    for (std::size_t k = 0; k + 1 < members.size(); ++k) {
      const auto first = model.demand_slots(members[k]);
      const auto second = model.demand_slots(members[k + 1]);
      // Same origins in direct mode: both demands have slots on exactly
      // the same links, in the same order.
      model.add_propagator(std::make_shared<LinkOrder>(
          std::vector<std::size_t>(first.begin(), first.end()),
          std::vector<std::size_t>(second.begin(), second.end())));
    }
  }
}

ChunkPlan make_chunk_plan(const Request& request, std::size_t chunk_size,
                          bool sort_by_origin_count) {
  if (chunk_size == 0) throw std::invalid_argument("chunk size must be >= 1");
  std::vector<std::size_t> order(request.demands.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (sort_by_origin_count) {
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return request.demands[a].origins.size() > request.demands[b].origins.size();
    });
  }
  ChunkPlan plan{chunk_size, {}};
  for (std::size_t i = 0; i < order.size(); i += chunk_size) {
    const std::size_t end = std::min(order.size(), i + chunk_size);
    plan.chunks.emplace_back(order.begin() + i, order.begin() + end);
  }
  return plan;
}

ChunkedResult solve_chunked(const Network& network, const Request& request,
                            std::size_t chunk_size, const ModelConfig& config,
                            const ChunkOptions& options) {
  const Request planned = drop_satisfied_demands(request);
  const ChunkPlan plan =
      make_chunk_plan(planned, chunk_size, options.sort_by_origin_count);
  ChunkedResult result;
  Schedule committed;
  for (std::size_t c = 0; c < plan.chunks.size(); ++c) {
    Request part{planned.destination, {}};
    for (std::size_t d : plan.chunks[c]) part.demands.push_back(planned.demands[d]);
    Reservations reserved = reservations_from(committed, network, planned.destination);
    if (!config.enforce_storage) reserved.storage.clear();
    SolveResult solved;
    try {
      Model model = build_model(network, part, config, reserved);
      solved = solve(model, options.chunk_budget);
    } catch (const InfeasibleError&) {
      solved.report.status = SearchStatus::kInfeasible;
    }
    result.reports.push_back(solved.report);
    if (!solved.schedule) {
      result.failed_chunk = c;
      return result;
    }
    committed.entries.insert(committed.entries.end(),
                             solved.schedule->entries.begin(),
                             solved.schedule->entries.end());
  }
  normalize(committed);
  result.schedule = std::move(committed);
  return result;
}

std::string reports_to_json(const std::vector<SearchReport>& reports) {
  std::string out = "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out += ",";
    out += report_to_json(reports[i]);
  }
  return out + "]";
}

SolveResult solve_time_limited(const Network& network, const Request& request,
                               double coefficient_ms, const ModelConfig& config) {
  if (!(coefficient_ms >= 0)) {
    throw std::invalid_argument("time coefficient must be non-negative");
  }
  Model model = build_model(network, request, config);
  const double total = coefficient_ms *
                       static_cast<double>(model.request().demands.size());
  SearchBudget budget;
  budget.time_limit = std::chrono::microseconds(
      static_cast<std::int64_t>(std::floor(total * 1000.0)));
  return solve(model, budget);
}

}  // namespace gridplan
