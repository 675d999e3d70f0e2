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

#include "gridplan/gantt.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace gridplan {
namespace {

// First-fit lane assignment; bars are sorted by (start, label) first.
int assign_lanes(std::vector<GanttBar>& bars) {
  std::sort(bars.begin(), bars.end(), [](const GanttBar& a, const GanttBar& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.label != b.label) return a.label < b.label;
    return a.end < b.end;
  });
  std::vector<Time> lane_end;
  for (auto& bar : bars) {
    std::size_t lane = 0;
    while (lane < lane_end.size() && lane_end[lane] > bar.start) ++lane;
    if (lane == lane_end.size()) lane_end.push_back(0);
    lane_end[lane] = bar.end;
    bar.lane = static_cast<int>(lane);
  }
  return std::max<int>(1, static_cast<int>(lane_end.size()));
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                    "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                                    "#9c755f", "#bab0ac"};

std::string format(const char* fmt, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, fmt, args...);
  return buffer;
}

}  // namespace

GanttDocument build_gantt(const Schedule& schedule, const Network& network,
                          const GanttOptions& options) {
  GanttDocument doc;
  doc.horizon = schedule.makespan;
  std::vector<GanttRow> link_rows(network.links().size());
  for (std::size_t l = 0; l < link_rows.size(); ++l) {
    link_rows[l].label = network.link(l).id;
  }
  for (const auto& e : schedule.entries) {
    if (auto l = network.link_index(e.link)) {
      link_rows[*l].bars.push_back({e.demand, e.start, e.end, 0});
    }
    doc.horizon = std::max(doc.horizon, e.end);
  }

  std::vector<GanttRow> group_rows;
  if (options.group_rows) {
    const auto& groups = network.shared_groups();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      GanttRow row{GanttRow::Kind::kSharedGroup, "group #" + std::to_string(g), 1, {}};
      for (const auto& member : groups[g].members) {
        if (auto l = network.link_index(member)) {
          for (const auto& bar : link_rows[*l].bars) row.bars.push_back(bar);
        }
      }
      group_rows.push_back(std::move(row));
    }
  }

  std::vector<GanttRow> storage_rows;
  if (options.storage_lanes) {
    std::map<std::string, std::vector<const ScheduleEntry*>> by_demand;
    for (const auto& e : schedule.entries) by_demand[e.demand].push_back(&e);
    std::vector<std::vector<GanttBar>> held(network.sites().size());
    for (auto& [name, entries] : by_demand) {
      std::sort(entries.begin(), entries.end(),
                [](auto* a, auto* b) { return a->start < b->start; });
      for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        auto in = network.link_index(entries[i]->link);
        if (!in) continue;
        // Space is held from the start of the arrival to the end of the departure.
        held[network.link_to(*in)].push_back(
            {name, entries[i]->start, entries[i + 1]->end, 0});
      }
    }
    for (std::size_t s = 0; s < held.size(); ++s) {
      const auto& site = network.site(s);
      if (held[s].empty() && !site.storage) continue;
      std::string label = "storage " + site.id;
      if (site.storage) label += " (" + std::to_string(*site.storage) + ")";
      storage_rows.push_back({GanttRow::Kind::kStorage, label, 1, std::move(held[s])});
    }
  }

  for (auto* rows : {&link_rows, &group_rows, &storage_rows}) {
    for (auto& row : *rows) {
      row.lanes = assign_lanes(row.bars);
      doc.rows.push_back(std::move(row));
    }
  }
  return doc;
}

std::string render_svg(const GanttDocument& doc) {
  constexpr int kLabelWidth = 160;
  constexpr int kLaneHeight = 22;
  constexpr int kTop = 30;
  constexpr int kChartWidth = 720;
  const Time horizon = std::max<Time>(doc.horizon, 1);
  const double unit = static_cast<double>(kChartWidth) / static_cast<double>(horizon);
  // Axis ticks at 1, 2, 5, 10, 20, ... with at most 20 intervals.
  Time tick = 1;
  for (int i = 0; horizon / tick > 20; ++i) tick = (i % 3 == 1) ? tick / 2 * 5 : tick * 2;

  int lanes = 0;
  for (const auto& row : doc.rows) lanes += row.lanes;
  const int height = kTop + lanes * kLaneHeight + 30;
  const int width = kLabelWidth + kChartWidth + 20;

  std::map<std::string, std::size_t> colour;
  for (const auto& row : doc.rows) {
    for (const auto& bar : row.bars) colour.emplace(bar.label, 0);
  }
  std::size_t next = 0;
  for (auto& [label, index] : colour) index = next++ % std::size(kPalette);

  std::string svg = format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
      "font-family=\"monospace\" font-size=\"12\">\n",
      width, height);
  svg += format("<rect width=\"%d\" height=\"%d\" fill=\"white\"/>\n", width, height);
  const int axis_y = kTop + lanes * kLaneHeight;
  svg += format("<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n",
                kLabelWidth, axis_y, kLabelWidth + kChartWidth, axis_y);
  svg += format("<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n",
                kLabelWidth, kTop, kLabelWidth, axis_y);
  for (Time t = 0; t <= horizon; t += tick) {
    const double x = kLabelWidth + unit * static_cast<double>(t);
    svg += format("<line x1=\"%.2f\" y1=\"%d\" x2=\"%.2f\" y2=\"%d\" stroke=\"#ccc\"/>\n",
                  x, kTop, x, axis_y);
    svg += format("<text x=\"%.2f\" y=\"%d\" text-anchor=\"middle\">%lld</text>\n", x,
                  axis_y + 16, static_cast<long long>(t));
  }

  int lane_base = 0;
  for (const auto& row : doc.rows) {
    const int y = kTop + lane_base * kLaneHeight;
    svg += format("<text x=\"4\" y=\"%d\">%s</text>\n", y + 15, escape(row.label).c_str());
    svg += format("<line x1=\"0\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"#eee\"/>\n",
                  y, width, y);
    for (const auto& bar : row.bars) {
      const double x = kLabelWidth + unit * static_cast<double>(bar.start);
      const double w = unit * static_cast<double>(bar.end - bar.start);
      const int by = y + bar.lane * kLaneHeight + 2;
      svg += format(
          "<rect x=\"%.2f\" y=\"%d\" width=\"%.2f\" height=\"%d\" fill=\"%s\" "
          "stroke=\"black\"><title>%s [%lld, %lld)</title></rect>\n",
          x, by, w, kLaneHeight - 4, kPalette[colour[bar.label]], escape(bar.label).c_str(),
          static_cast<long long>(bar.start), static_cast<long long>(bar.end));
      svg += format("<text x=\"%.2f\" y=\"%d\" font-size=\"10\">%s</text>\n", x + 2,
                    by + 13, escape(bar.label).c_str());
    }
    lane_base += row.lanes;
  }
  svg += "</svg>\n";
  return svg;
}

std::string render_ascii(const GanttDocument& doc) {
  std::size_t label_width = 4;
  for (const auto& row : doc.rows) label_width = std::max(label_width, row.label.size());
  const auto horizon = static_cast<std::size_t>(std::max<Time>(doc.horizon, 0));

  std::string out;
  auto pad = [&](const std::string& s) {
    return s + std::string(label_width - s.size(), ' ') + " |";
  };
  std::string axis = pad("time");
  for (std::size_t t = 0; t < horizon; ++t) axis += static_cast<char>('0' + t % 10);
  out += axis + "\n";
  for (const auto& row : doc.rows) {
    for (int lane = 0; lane < row.lanes; ++lane) {
      std::string cells(horizon, '.');
      for (const auto& bar : row.bars) {
        if (bar.lane != lane) continue;
        const char mark = bar.label.empty() ? '#' : bar.label.back();
        for (Time t = bar.start; t < bar.end && t < doc.horizon; ++t) {
          cells[static_cast<std::size_t>(t)] = mark;
        }
        if (bar.end > bar.start) cells[static_cast<std::size_t>(bar.start)] = '[';
      }
      out += pad(lane == 0 ? row.label : "") + cells + "\n";
    }
  }
  for (const auto& row : doc.rows) {
    for (const auto& bar : row.bars) {
      if (row.kind != GanttRow::Kind::kLink) continue;
      out += row.label + ": " + bar.label + " [" + std::to_string(bar.start) + ", " +
             std::to_string(bar.end) + ")\n";
    }
  }
  return out;
}

}  // namespace gridplan
