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

#include "gridplan/search.hpp"

#include <sstream>
#include <vector>

#include "json.hpp"

namespace gridplan {

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kOptimal:
      return "optimal";
    case SearchStatus::kFeasible:
      return "feasible";
    case SearchStatus::kInfeasible:
      return "infeasible";
    case SearchStatus::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "?";
}

std::string report_to_json(const SearchReport& report) {
  nlohmann::ordered_json j;
  j["nodes"] = report.nodes;
  j["backtracks"] = report.backtracks;
  j["wall_ms"] = report.wall_time.count();
  j["proven_optimal"] = report.proven_optimal;
  if (report.best_makespan) {
    j["makespan"] = *report.best_makespan;
  } else {
    j["makespan"] = nullptr;
  }
  return j.dump();
}

Schedule decode(const Model& model, const Domains& domains) {
  Schedule schedule;
  const auto slots = model.slots();
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (!domains.chosen(s)) continue;
    const Time start = domains.lo[s];
    schedule.entries.push_back(
        {model.request().demands[slots[s].demand].name,
         model.network().link(slots[s].link).id, start,
         start + slots[s].duration});
  }
  normalize(schedule);
  return schedule;
}

namespace {

enum class Pick { kNone, kRouting, kStart };

struct Choice {
  Pick kind = Pick::kNone;
  std::size_t slot = 0;
};

// Goal 1: unassigned routing variables (all have domain size 2, so the
// smallest-domain rule reduces to declaration order). Goal 2: start times
// of routed transfers, smallest interval first.
Choice choose(const Domains& d) {
  for (std::size_t s = 0; s < d.slot_count(); ++s) {
    if (d.routed[s] == Tri::kUnknown) return {Pick::kRouting, s};
  }
  Choice best;
  Time best_width = 0;
  for (std::size_t s = 0; s < d.slot_count(); ++s) {
    if (!d.chosen(s) || d.lo[s] == d.hi[s]) continue;
    const Time width = d.hi[s] - d.lo[s];
    if (best.kind == Pick::kNone || width < best_width) {
      best = {Pick::kStart, s};
      best_width = width;
    }
  }
  return best;
}

Time makespan_of(const Model& model, const Domains& d) {
  Time makespan = 0;
  const auto slots = model.slots();
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (d.chosen(s)) makespan = std::max(makespan, d.lo[s] + slots[s].duration);
  }
  return makespan;
}

}  // namespace

SolveResult solve(const Model& model, const SearchBudget& budget) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  SolveResult result;
  SearchReport& report = result.report;

  Time bound = model.horizon();
  bool out_of_budget = false;
  std::vector<Domains> stack{model.initial_domains()};

  while (!stack.empty()) {
    if (budget.node_limit && report.nodes >= *budget.node_limit) {
      out_of_budget = true;
      break;
    }
    if (budget.time_limit && Clock::now() - started >= *budget.time_limit) {
      out_of_budget = true;
      break;
    }
    Domains d = std::move(stack.back());
    stack.pop_back();
    ++report.nodes;
    d.bound = std::min(d.bound, bound);
    if (!model.propagate(d)) {
      ++report.backtracks;
      continue;
    }
    const Choice choice = choose(d);
    if (choice.kind == Pick::kNone) {
      const Time makespan = makespan_of(model, d);
      result.schedule = decode(model, d);
      report.best_makespan = makespan;
      bound = makespan - 1;
      continue;
    }
    // Push the right branch first so the left one is explored first.
    Domains right = d;
    bool ignored = false;
    if (choice.kind == Pick::kRouting) {
      right.routed[choice.slot] = Tri::kTrue;
      d.routed[choice.slot] = Tri::kFalse;
    } else {
      right.raise_start(choice.slot, d.lo[choice.slot] + 1, ignored);
      d.hi[choice.slot] = d.lo[choice.slot];
    }
    stack.push_back(std::move(right));
    stack.push_back(std::move(d));
  }

  report.wall_time = Clock::now() - started;
  if (out_of_budget) {
    report.status = result.schedule ? SearchStatus::kFeasible
                                    : SearchStatus::kBudgetExhausted;
  } else {
    report.status =
        result.schedule ? SearchStatus::kOptimal : SearchStatus::kInfeasible;
  }
  report.proven_optimal = report.status == SearchStatus::kOptimal;
  return result;
}

}  // namespace gridplan
