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

#ifndef GRIDPLAN_STRATEGIES_HPP
#define GRIDPLAN_STRATEGIES_HPP

#include <optional>
#include <vector>

#include "gridplan/model.hpp"
#include "gridplan/search.hpp"

namespace gridplan {

// Orders interchangeable demands (same origin set and size) by chosen link
// and, on a shared link, by start time. Only applies to direct-connection
// models; a no-op otherwise. Called by build_model when
// ModelConfig::symmetry_breaking is set.
void add_symmetry_breaking(Model& model);

struct ChunkPlan {
  std::size_t chunk_size = 1;
  // Indices into the request's demands.
  std::vector<std::vector<std::size_t>> chunks;
};

struct ChunkOptions {
  // Put demands with more origins first (stable). Off by default: chunks
  // follow request order.
  bool sort_by_origin_count = false;
  // Budget for each chunk's search.
  SearchBudget chunk_budget;
};

ChunkPlan make_chunk_plan(const Request& request, std::size_t chunk_size,
                          bool sort_by_origin_count = false);

struct ChunkedResult {
  std::optional<Schedule> schedule;
  std::vector<SearchReport> reports;
  // Index of the chunk that produced no schedule, if any.
  std::optional<std::size_t> failed_chunk;
};

// Solves the request chunk by chunk. Every transfer committed by earlier
// chunks becomes a fixed reservation (links, shared groups, storage) for
// the later ones.
ChunkedResult solve_chunked(const Network& network, const Request& request,
                            std::size_t chunk_size, const ModelConfig& config,
                            const ChunkOptions& options = {});

// JSON array of per-chunk reports.
std::string reports_to_json(const std::vector<SearchReport>& reports);

// Milliseconds of search per demand.
inline constexpr double kDefaultTimeCoefficientMs = 100.0;

// Plain solve with a wall-time budget of `coefficient_ms` x |demands|.
SolveResult solve_time_limited(const Network& network, const Request& request,
                               double coefficient_ms, const ModelConfig& config);

}  // namespace gridplan

#endif  // GRIDPLAN_STRATEGIES_HPP
