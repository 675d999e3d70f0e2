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

#ifndef GRIDPLAN_SEARCH_HPP
#define GRIDPLAN_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "gridplan/model.hpp"
#include "gridplan/schedule.hpp"

namespace gridplan {

struct SearchBudget {
  std::optional<std::chrono::microseconds> time_limit;
  std::optional<std::uint64_t> node_limit;
};

enum class SearchStatus {
  kOptimal,          // search exhausted with an incumbent
  kFeasible,         // budget ran out after at least one incumbent
  kInfeasible,       // search exhausted, no solution exists
  kBudgetExhausted,  // budget ran out before the first incumbent
};

const char* to_string(SearchStatus status);

struct SearchReport {
  std::uint64_t nodes = 0;
  std::uint64_t backtracks = 0;
  std::chrono::duration<double, std::milli> wall_time{0};
  bool proven_optimal = false;
  std::optional<Time> best_makespan;
  SearchStatus status = SearchStatus::kBudgetExhausted;
};

// {"nodes":..,"backtracks":..,"wall_ms":..,"proven_optimal":..,"makespan":..}
// with makespan null when there is no schedule.
std::string report_to_json(const SearchReport& report);

struct SolveResult {
  std::optional<Schedule> schedule;
  SearchReport report;
};

// Depth-first branch and bound. Routing variables are assigned first, then
// the start times of the chosen transfers; both by smallest domain (ties
// in declaration order) and increasing value. Each incumbent of makespan
// M tightens the bound to M - 1.
SolveResult solve(const Model& model, const SearchBudget& budget = {});

// Schedule of a fully assigned, consistent state.
Schedule decode(const Model& model, const Domains& domains);

}  // namespace gridplan

#endif  // GRIDPLAN_SEARCH_HPP
