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

#include "gridplan/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace gridplan {

Time compute_makespan(const std::vector<ScheduleEntry>& entries) {
  Time makespan = 0;
  for (const auto& e : entries) makespan = std::max(makespan, e.end);
  return makespan;
}

void normalize(Schedule& schedule) {
  std::stable_sort(schedule.entries.begin(), schedule.entries.end(),
                   [](const ScheduleEntry& a, const ScheduleEntry& b) {
                     if (a.demand != b.demand) return a.demand < b.demand;
                     if (a.start != b.start) return a.start < b.start;
                     return a.link < b.link;
                   });
  schedule.makespan = compute_makespan(schedule.entries);
}

void write_schedule_csv(std::ostream& out, const Schedule& schedule,
                        const Network& network) {
  Schedule sorted = schedule;
  normalize(sorted);
  out << "demand,link,from,to,start,end\n";
  for (const auto& e : sorted.entries) {
    std::string from, to;
    if (auto l = network.link_index(e.link)) {
      from = network.link(*l).from;
      to = network.link(*l).to;
    }
    out << e.demand << ',' << e.link << ',' << from << ',' << to << ','
        << e.start << ',' << e.end << '\n';
  }
}

std::string schedule_to_csv(const Schedule& schedule, const Network& network) {
  std::ostringstream out;
  write_schedule_csv(out, schedule, network);
  return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  return fields;
}

Time parse_time(const std::string& text, std::size_t line_no,
                const char* column) {
  Time value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw InputError("schedule line " + std::to_string(line_no) + ": bad " +
                     column + " '" + text + "'");
  }
  return value;
}

}  // namespace

Schedule read_schedule_csv(std::istream& in, const Network& network) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("schedule: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "demand,link,from,to,start,end") {
    throw InputError("schedule line 1: unexpected header '" + line + "'");
  }
  Schedule schedule;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 6) {
      throw InputError("schedule line " + std::to_string(line_no) +
                       ": expected 6 fields, got " +
                       std::to_string(fields.size()));
    }
    auto l = network.link_index(fields[1]);
    if (!l) {
      throw InputError("schedule line " + std::to_string(line_no) +
                       ": unknown link '" + fields[1] + "'");
    }
    const Link& link = network.link(*l);
    if (link.from != fields[2] || link.to != fields[3]) {
      throw InputError("schedule line " + std::to_string(line_no) +
                       ": endpoints of link '" + fields[1] +
                       "' do not match the network");
    }
    ScheduleEntry entry{fields[0], fields[1],
                        parse_time(fields[4], line_no, "start"),
                        parse_time(fields[5], line_no, "end")};
    if (entry.demand.empty()) {
      throw InputError("schedule line " + std::to_string(line_no) +
                       ": empty demand name");
    }
    if (entry.end <= entry.start) {
      throw InputError("schedule line " + std::to_string(line_no) +
                       ": end must be after start");
    }
    schedule.entries.push_back(std::move(entry));
  }
  normalize(schedule);
  return schedule;
}

}  // namespace gridplan
