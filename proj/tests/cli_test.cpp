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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gridplan/cli.hpp"
#include "gridplan/gantt.hpp"
#include "gridplan/io.hpp"
#include "test_util.hpp"

namespace gridplan {
namespace {

using testing::data_path;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("gridplan_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  static std::string slurp(const std::string& p) { return read_file(p); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, PlanOnMeshUsesOnePath) {
  const CliRun r = cli({"plan", data_path("mesh_network.json"), data_path("mesh_request.json"),
                     "--method", "optimal", "--transit"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "demand,link,from,to,start,end\n"
            "F,L23,Site_2,Site_3,0,1\n"
            "F,L3D,Site_3,Dest,1,2\n");
  EXPECT_NE(r.err.find("\"proven_optimal\":true"), std::string::npos);
}

TEST_F(CliTest, ReportToFile) {
  const CliRun r = cli({"plan", data_path("star_network.json"), data_path("star_request.json"),
                     "--report", path("report.json"), "--out", path("s.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  const std::string report = slurp(path("report.json"));
  for (const char* key : {"nodes", "backtracks", "wall_ms", "proven_optimal", "makespan"}) {
    EXPECT_NE(report.find(key), std::string::npos);
  }
  EXPECT_EQ(slurp(path("s.csv")).rfind("demand,link,from,to,start,end\n", 0), 0u);
}

TEST_F(CliTest, P2PWithTransitIsRejected) {
  const CliRun r = cli({"plan", data_path("star_network.json"), data_path("star_request.json"),
                     "--method", "p2p", "--transit"});
  EXPECT_EQ(r.code, kExitBadInput);
  EXPECT_NE(r.err.find("P2P requires direct connections"), std::string::npos);
}

TEST_F(CliTest, ChunkedMatchesOptimalOnSharedFiles) {
  const std::string net = write("net.json", R"j({"sites": [
      {"id": "S1", "storage": "unbounded"}, {"id": "S2", "storage": "unbounded"},
      {"id": "D", "storage": "unbounded"}],
    "links": [{"id": "L1", "from": "S1", "to": "D", "slowdown": 1},
              {"id": "L2", "from": "S2", "to": "D", "slowdown": 2}]})j");
  const std::string req = write("req.json", R"j({"destination": "D", "demands": [
      {"name": "a", "size": 1, "origins": ["S1", "S2"]},
      {"name": "b", "size": 1, "origins": ["S1", "S2"]},
      {"name": "c", "size": 1, "origins": ["S1", "S2"]}]})j");
  const CliRun opt = cli({"plan", net, req, "--report", path("o.json")});
  const CliRun chunk = cli({"plan", net, req, "--method", "chunked", "--chunk-size", "1",
                         "--report", path("c.json")});
  ASSERT_EQ(opt.code, kExitOk);
  ASSERT_EQ(chunk.code, kExitOk);
  EXPECT_NE(slurp(path("o.json")).find("\"makespan\":2"), std::string::npos);
  EXPECT_EQ(std::count(chunk.out.begin(), chunk.out.end(), '\n'), 4);
  EXPECT_EQ(chunk.out.substr(chunk.out.size() - 2), "2\n");
}

TEST_F(CliTest, InfeasibleExitCode) {
  const std::string net = write("net.json", R"j({"sites": [
      {"id": "A", "storage": "unbounded"}, {"id": "B", "storage": "unbounded"},
      {"id": "D", "storage": "unbounded"}],
    "links": [{"id": "ab", "from": "A", "to": "B", "slowdown": 1},
              {"id": "bd", "from": "B", "to": "D", "slowdown": 1}]})j");
  const std::string req = write("req.json", R"j({"destination": "D", "demands": [
      {"name": "f", "size": 1, "origins": ["A"]}]})j");
  EXPECT_EQ(cli({"plan", net, req}).code, kExitInfeasible);
  EXPECT_EQ(cli({"plan", net, req, "--transit"}).code, kExitOk);
}

TEST_F(CliTest, BudgetExitCode) {
  const CliRun r = cli({"plan", data_path("star_network.json"), data_path("star_request.json"),
                     "--node-limit", "0"});
  EXPECT_EQ(r.code, kExitBudget);
  const CliRun t = cli({"plan", data_path("star_network.json"), data_path("star_request.json"),
                     "--method", "timelimited", "--time-coeff", "0.000000001"});
  EXPECT_EQ(t.code, kExitBudget);
}

TEST_F(CliTest, BadInputExitCode) {
  const std::string net = write("net.json", R"j({"sites": [], "links": [], "extra": 1})j");
  const CliRun r = cli({"validate", net});
  EXPECT_EQ(r.code, kExitBadInput);
  EXPECT_NE(r.err.find("extra"), std::string::npos);
  EXPECT_EQ(cli({"plan", net, data_path("star_request.json")}).code, kExitBadInput);
  EXPECT_EQ(cli({"plan"}).code, kExitBadInput);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitBadInput);
  EXPECT_EQ(cli({"plan", data_path("star_network.json"), data_path("star_request.json"),
                 "--method", "magic"})
                .code,
            kExitBadInput);
}

TEST_F(CliTest, ValidateReportsNotices) {
  const std::string req = write("req.json", R"j({"destination": "Dest", "demands": [
      {"name": "here", "size": 1, "origins": ["Dest"]},
      {"name": "a", "size": 1, "origins": ["Site_1"]}]})j");
  const CliRun r = cli({"validate", data_path("star_network.json"), req});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("already at destination, dropped"), std::string::npos);
  EXPECT_NE(r.out.find("1 demands"), std::string::npos);
}

TEST_F(CliTest, SimulateIsDeterministic) {
  const CliRun a = cli({"simulate", data_path("star_network.json"), data_path("star_request.json"),
                     "--seed", "5"});
  const CliRun b = cli({"simulate", data_path("star_network.json"), data_path("star_request.json"),
                     "--seed", "5"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
  EXPECT_NE(a.err.find("pick="), std::string::npos);
}

TEST_F(CliTest, BenchCsvHasLossForP2P) {
  const CliRun r = cli({"bench", "--methods", "optimal,p2p", "--max-files", "4", "--reps", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "method,case,n_files,seed_reps,median_wall_ms,median_makespan,loss_pct");
  int p2p_rows = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("p2p,", 0) != 0) continue;
    ++p2p_rows;
    EXPECT_EQ(line.find("NA"), std::string::npos) << line;
  }
  EXPECT_EQ(p2p_rows, 4);
}

TEST_F(CliTest, BenchWithSpecFile) {
  const std::string spec = write("spec.json", R"j({"case": "shared", "n_files": [2],
      "repetitions": 1, "methods": ["optimal", "chunked(1)"]})j");
  const CliRun r = cli({"bench", spec, "--out", path("out.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string csv = slurp(path("out.csv"));
  EXPECT_NE(csv.find("optimal,shared,2,1,"), std::string::npos);
  EXPECT_NE(csv.find("chunked(1),shared,2,1,"), std::string::npos);
}

TEST_F(CliTest, PlanThenGanttRoundTrip) {
  ASSERT_EQ(cli({"plan", data_path("funnel_network.json"), data_path("funnel_request.json"),
                 "--transit", "--storage", "--out", path("s.csv")})
                .code,
            kExitOk);
  const CliRun a = cli({"gantt", path("s.csv"), data_path("funnel_network.json"), "--storage-lanes"});
  const CliRun b = cli({"gantt", path("s.csv"), data_path("funnel_network.json"), "--storage-lanes"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("<svg", 0), 0u);
  EXPECT_NE(a.out.find("storage Site_3"), std::string::npos);
}

TEST_F(CliTest, GanttRefusesViolatingSchedule) {
  const std::string csv = write("s.csv",
                                "demand,link,from,to,start,end\n"
                                "f1,L13,Site_1,Site_3,0,1\n"
                                "f1,L34,Site_3,Site_4,1,2\n"
                                "f2,L23,Site_2,Site_3,0,1\n"
                                "f2,L34,Site_3,Site_4,2,3\n");
  const CliRun r = cli({"gantt", csv, data_path("funnel_network.json")});
  EXPECT_EQ(r.code, kExitBadInput);
  EXPECT_NE(r.err.find("storage at Site_3"), std::string::npos);
  const CliRun ok = cli({"gantt", csv, data_path("funnel_network.json"), "--skip-storage-check",
                      "--ascii"});
  EXPECT_EQ(ok.code, kExitOk);
}

TEST(Gantt, FunnelStorageLaneIsSerialized) {
  const Network net = load_network(data_path("funnel_network.json"));
  Schedule s{{{"f1", "L13", 0, 1}, {"f1", "L34", 1, 2}, {"f2", "L23", 2, 3}, {"f2", "L34", 3, 4}},
             4};
  GanttOptions options;
  options.storage_lanes = true;
  const GanttDocument doc = build_gantt(s, net, options);
  EXPECT_EQ(doc.horizon, 4);
  ASSERT_EQ(doc.rows.size(), 4u);
  const GanttRow& storage = doc.rows.back();
  EXPECT_EQ(storage.kind, GanttRow::Kind::kStorage);
  EXPECT_EQ(storage.lanes, 1);
  ASSERT_EQ(storage.bars.size(), 2u);
  EXPECT_LE(storage.bars[0].end, storage.bars[1].start);
}

TEST(Gantt, EmptyScheduleHasAxes) {
  const Network net = load_network(data_path("star_network.json"));
  const GanttDocument doc = build_gantt({}, net);
  EXPECT_EQ(doc.rows.size(), 4u);
  for (const auto& row : doc.rows) EXPECT_TRUE(row.bars.empty());
  const std::string svg = render_svg(doc);
  EXPECT_NE(svg.find("<line"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Gantt, TwoDirectFilesTwoBars) {
  const Network net = load_network(data_path("star_network.json"));
  Schedule s{{{"a", "L1", 0, 1}, {"b", "L1", 1, 2}}, 2};
  const GanttDocument doc = build_gantt(s, net);
  ASSERT_EQ(doc.rows[0].bars.size(), 2u);
  EXPECT_EQ(doc.rows[0].lanes, 1);
  EXPECT_LE(doc.rows[0].bars[0].end, doc.rows[0].bars[1].start);
  EXPECT_EQ(render_svg(doc), render_svg(build_gantt(s, net)));
  EXPECT_NE(render_ascii(doc).find("L1: a [0, 1)"), std::string::npos);
}

TEST(Gantt, GroupRowsStackOverlaps) {
  const Network net = load_network(data_path("star_network.json"));
  Schedule s{{{"a", "L1", 0, 1}, {"b", "L2", 0, 2}}, 2};
  GanttOptions options;
  options.group_rows = true;
  const GanttDocument doc = build_gantt(s, net, options);
  const GanttRow& group = doc.rows.back();
  EXPECT_EQ(group.kind, GanttRow::Kind::kSharedGroup);
  EXPECT_EQ(group.lanes, 2);
}

}  // namespace
}  // namespace gridplan
