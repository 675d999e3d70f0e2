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

#ifndef GRIDPLAN_SCHEDULE_HPP
#define GRIDPLAN_SCHEDULE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gridplan/network.hpp"

namespace gridplan {

struct ScheduleEntry {
  std::string demand;
  std::string link;
  Time start = 0;
  Time end = 0;

  bool operator==(const ScheduleEntry&) const = default;
};

struct Schedule {
  std::vector<ScheduleEntry> entries;
  Time makespan = 0;

  bool operator==(const Schedule&) const = default;
};

// Recomputes the makespan from the entries (0 when empty).
Time compute_makespan(const std::vector<ScheduleEntry>& entries);

// Sorts entries by (demand, start, link) and refreshes the makespan.
void normalize(Schedule& schedule);

// CSV with header `demand,link,from,to,start,end`, rows sorted by
// (demand, start). Endpoints are looked up in `network`.
void write_schedule_csv(std::ostream& out, const Schedule& schedule,
                        const Network& network);
std::string schedule_to_csv(const Schedule& schedule, const Network& network);

// Parses the CSV above. Link ids must exist in `network` and the from/to
// columns must agree with it. Throws InputError with the line number.
Schedule read_schedule_csv(std::istream& in, const Network& network);

}  // namespace gridplan

#endif  // GRIDPLAN_SCHEDULE_HPP
