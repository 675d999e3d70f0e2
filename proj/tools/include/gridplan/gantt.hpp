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

#ifndef GRIDPLAN_GANTT_HPP
#define GRIDPLAN_GANTT_HPP

#include <string>
#include <vector>

#include "gridplan/network.hpp"
#include "gridplan/schedule.hpp"

namespace gridplan {

struct GanttBar {
  std::string label;  // demand name
  Time start = 0;
  Time end = 0;
  int lane = 0;       // sub-row inside the resource row
};

struct GanttRow {
  enum class Kind { kLink, kSharedGroup, kStorage };
  Kind kind = Kind::kLink;
  std::string label;
  int lanes = 1;
  std::vector<GanttBar> bars;
};

struct GanttDocument {
  std::vector<GanttRow> rows;
  Time horizon = 0;
};

struct GanttOptions {
  bool storage_lanes = false;  // occupancy rows for transit sites
  bool group_rows = false;     // one row per shared-link group
};

// Link rows come first in network order, then shared groups, then
// storage sites. Bars that overlap inside a row are stacked on separate
// lanes (first fit, by start then label).
GanttDocument build_gantt(const Schedule& schedule, const Network& network,
                          const GanttOptions& options = {});

std::string render_svg(const GanttDocument& doc);
std::string render_ascii(const GanttDocument& doc);

}  // namespace gridplan

#endif  // GRIDPLAN_GANTT_HPP
