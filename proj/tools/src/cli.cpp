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

#include "gridplan/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "gridplan/bench.hpp"
#include "gridplan/gantt.hpp"
#include "gridplan/io.hpp"
#include "gridplan/model.hpp"
#include "gridplan/p2p.hpp"
#include "gridplan/replay.hpp"
#include "gridplan/search.hpp"
#include "gridplan/strategies.hpp"
#include "gridplan/validate.hpp"

namespace gridplan {
namespace {

struct PlanArgs {
  std::string network, request, method = "optimal", out, report;
  std::size_t chunk_size = 1;
  double time_coeff = kDefaultTimeCoefficientMs;
  std::optional<std::int64_t> time_limit_ms;
  std::optional<std::uint64_t> node_limit;
  bool symmetry = false, transit = false, storage = false, shared_groups = false;
  std::uint64_t seed = 0;
};

struct SimulateArgs {
  std::string network, request, out, trace;
  std::uint64_t seed = 0;
};

struct BenchArgs {
  std::string spec, out, methods;
  std::optional<std::size_t> max_files, reps;
  std::optional<std::uint64_t> seed;
};

struct GanttArgs {
  std::string schedule, network, out;
  bool storage_lanes = false, group_rows = false, ascii = false;
  bool skip_storage_check = false, skip_group_check = false;
};

struct ValidateArgs {
  std::string network, request;
};

// Writes to `path`, or to `fallback` when the path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
  if (!file) throw InputError("error writing '" + path + "'");
}

std::string p2p_report(const Schedule& schedule, double wall_ms) {
  SearchReport report;
  report.wall_time = std::chrono::duration<double, std::milli>(wall_ms);
  report.best_makespan = schedule.makespan;
  report.status = SearchStatus::kFeasible;
  return report_to_json(report) + "\n";
}

int exit_for(const SearchReport& report) {
  switch (report.status) {
    case SearchStatus::kOptimal:
    case SearchStatus::kFeasible:
      return kExitOk;
    case SearchStatus::kInfeasible:
      return kExitInfeasible;
    case SearchStatus::kBudgetExhausted:
      return kExitBudget;
  }
  return kExitBudget;
}

int cmd_plan(const PlanArgs& a, std::ostream& out, std::ostream& err) {
  const Network network = load_network(a.network);
  const Request request = load_request(a.request);
  const auto check = validate(network, request);
  for (const auto& issue : check.issues) {
    if (issue.severity != Severity::kViolation) err << "note: " << issue.message << "\n";
  }
  if (!check.ok()) {
    for (const auto& v : check.violations()) err << "error: " << v << "\n";
    return kExitBadInput;
  }

  ModelConfig config;
  config.allow_transit = a.transit;
  config.enforce_storage = a.storage;
  config.enforce_shared_groups = a.shared_groups;
  config.symmetry_breaking = a.symmetry;
  SearchBudget budget;
  if (a.time_limit_ms) budget.time_limit = std::chrono::milliseconds(*a.time_limit_ms);
  budget.node_limit = a.node_limit;

  std::optional<Schedule> schedule;
  std::string report;
  int code = kExitOk;
  try {
    if (a.method == "p2p") {
      if (a.transit) {
        err << "error: P2P requires direct connections (drop --transit)\n";
        return kExitBadInput;
      }
      const auto started = std::chrono::steady_clock::now();
      auto result = p2p::simulate(network, request, a.seed);
      const double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
      schedule = result.schedule;
      report = p2p_report(result.schedule, ms);
    } else if (a.method == "optimal") {
      Model model = build_model(network, request, config);
      auto result = solve(model, budget);
      schedule = result.schedule;
      report = report_to_json(result.report) + "\n";
      code = exit_for(result.report);
    } else if (a.method == "timelimited") {
      if (!(a.time_coeff > 0)) {
        err << "error: --time-coeff must be positive\n";
        return kExitBadInput;
      }
      auto result = solve_time_limited(network, request, a.time_coeff, config);
      schedule = result.schedule;
      report = report_to_json(result.report) + "\n";
      code = exit_for(result.report);
    } else if (a.method == "chunked") {
      ChunkOptions options;
      options.chunk_budget = budget;
      auto result = solve_chunked(network, request, a.chunk_size, config, options);
      schedule = result.schedule;
      report = reports_to_json(result.reports) + "\n";
      if (result.failed_chunk) {
        err << "error: chunk " << *result.failed_chunk << " has no schedule\n";
        code = exit_for(result.reports.back());
      }
    } else {
      err << "error: unknown method '" << a.method << "'\n";
      return kExitBadInput;
    }
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  }

  emit(a.report, report, err);
  if (!schedule) {
    err << (code == kExitInfeasible ? "infeasible: no schedule exists\n"
                                    : "budget exhausted before any schedule\n");
    return code == kExitOk ? kExitBudget : code;
  }
  emit(a.out, schedule_to_csv(*schedule, network), out);
  return kExitOk;
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  const Network network = load_network(a.network);
  const Request request = load_request(a.request);
  auto result = p2p::simulate(network, request, a.seed);
  emit(a.out, schedule_to_csv(result.schedule, network), out);
  emit(a.trace, p2p::format_trace(result.trace), err);
  return kExitOk;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream&) {
  bench::ComparisonPlan plan;
  plan.methods = {bench::Method::parse("optimal"), bench::Method::parse("p2p")};
  if (!a.spec.empty()) plan = bench::parse_bench_spec(read_file(a.spec), a.spec);
  if (!a.methods.empty()) {
    plan.methods.clear();
    for (const auto& m : split(a.methods, ',')) plan.methods.push_back(bench::Method::parse(m));
  }
  if (a.max_files) {
    if (*a.max_files < 1) throw InputError("--max-files must be >= 1");
    plan.n_files.clear();
    for (std::size_t n = 1; n <= *a.max_files; ++n) plan.n_files.push_back(n);
  }
  if (a.reps) {
    if (*a.reps < 1) throw InputError("--reps must be >= 1");
    plan.repetitions = *a.reps;
  }
  if (a.seed) plan.seed = *a.seed;
  const auto rows = bench::run_comparison(plan);
  std::ostringstream csv;
  bench::write_comparison_csv(csv, rows);
  emit(a.out, csv.str(), out);
  return kExitOk;
}

int cmd_gantt(const GanttArgs& a, std::ostream& out, std::ostream& err) {
  const Network network = load_network(a.network);
  std::ifstream file(a.schedule, std::ios::binary);
  if (!file) throw InputError("cannot read '" + a.schedule + "'");
  const Schedule schedule = read_schedule_csv(file, network);
  ReplayChecks checks;
  checks.storage = !a.skip_storage_check;
  checks.shared_groups = !a.skip_group_check;
  if (auto violation = replay(schedule, network, checks)) {
    err << "error: schedule fails replay: " << violation->message << "\n";
    return kExitBadInput;
  }
  GanttOptions options;
  options.storage_lanes = a.storage_lanes;
  options.group_rows = a.group_rows;
  const auto doc = build_gantt(schedule, network, options);
  emit(a.out, a.ascii ? render_ascii(doc) : render_svg(doc), out);
  return kExitOk;
}

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  const Network network = parse_network(read_file(a.network), a.network);
  if (a.request.empty()) {
    out << "ok: " << network.sites().size() << " sites, " << network.links().size()
        << " links\n";
    for (const auto& issue : validate_network(network).issues) {
      if (issue.severity == Severity::kWarning) err << "warning: " << issue.message << "\n";
    }
    return kExitOk;
  }
  const Request request = parse_request(read_file(a.request), a.request);
  const auto result = validate(network, request);
  for (const auto& issue : result.issues) {
    const char* tag = issue.severity == Severity::kViolation ? "error"
                      : issue.severity == Severity::kWarning ? "warning"
                                                             : "note";
    err << tag << ": " << issue.message << "\n";
  }
  if (!result.ok()) return kExitBadInput;
  out << "ok: " << network.sites().size() << " sites, " << network.links().size()
      << " links, " << drop_satisfied_demands(request).demands.size() << " demands\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transfer planner for file demands over a site network", "gridplan"};
  app.require_subcommand(1);

  PlanArgs plan;
  auto* plan_cmd = app.add_subcommand("plan", "Compute a transfer schedule");
  plan_cmd->add_option("network", plan.network, "Network file")->required();
  plan_cmd->add_option("request", plan.request, "Request file")->required();
  plan_cmd->add_option("--method", plan.method, "Planning method")
      ->check(CLI::IsMember({"optimal", "chunked", "timelimited", "p2p"}));
  plan_cmd->add_option("--chunk-size", plan.chunk_size, "Demands per chunk")
      ->check(CLI::PositiveNumber);
  plan_cmd->add_option("--time-coeff", plan.time_coeff,
                       "Milliseconds of search per demand (timelimited)");
  plan_cmd->add_option("--time-limit", plan.time_limit_ms,
                       "Search time limit in ms (optimal, per chunk for chunked)");
  plan_cmd->add_option("--node-limit", plan.node_limit, "Search node limit");
  plan_cmd->add_flag("--symmetry", plan.symmetry, "Break symmetries between equal demands");
  plan_cmd->add_flag("--transit", plan.transit, "Allow paths through other sites");
  plan_cmd->add_flag("--storage", plan.storage, "Enforce site storage capacities");
  plan_cmd->add_flag("--shared-groups", plan.shared_groups, "Enforce shared link groups");
  plan_cmd->add_option("--seed", plan.seed, "Random seed (p2p)");
  plan_cmd->add_option("--out", plan.out, "Schedule CSV (default: stdout)");
  plan_cmd->add_option("--report", plan.report, "Report JSON (default: stderr)");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Run the peer-to-peer baseline");
  sim_cmd->add_option("network", sim.network, "Network file")->required();
  sim_cmd->add_option("request", sim.request, "Request file")->required();
  sim_cmd->add_option("--seed", sim.seed, "Random seed");
  sim_cmd->add_option("--out", sim.out, "Schedule CSV (default: stdout)");
  sim_cmd->add_option("--trace", sim.trace, "Event trace (default: stderr)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Compare planning methods");
  bench_cmd->add_option("spec", bench_args.spec, "Bench spec file");
  bench_cmd->add_option("--methods", bench_args.methods,
                        "Comma separated, e.g. optimal,chunked:1,p2p");
  bench_cmd->add_option("--max-files", bench_args.max_files, "Run n_files 1..N");
  bench_cmd->add_option("--reps", bench_args.reps, "Seeds per cell");
  bench_cmd->add_option("--seed", bench_args.seed, "First seed");
  bench_cmd->add_option("--out", bench_args.out, "CSV output (default: stdout)");

  GanttArgs gantt;
  auto* gantt_cmd = app.add_subcommand("gantt", "Draw a schedule");
  gantt_cmd->add_option("schedule", gantt.schedule, "Schedule CSV")->required();
  gantt_cmd->add_option("network", gantt.network, "Network file")->required();
  gantt_cmd->add_option("--out", gantt.out, "Output file (default: stdout)");
  gantt_cmd->add_flag("--storage-lanes", gantt.storage_lanes, "Add storage occupancy rows");
  gantt_cmd->add_flag("--group-rows", gantt.group_rows, "Add shared group rows");
  gantt_cmd->add_flag("--ascii", gantt.ascii, "Text chart instead of SVG");
  gantt_cmd->add_flag("--skip-storage-check", gantt.skip_storage_check,
                      "Accept schedules that overfill storage");
  gantt_cmd->add_flag("--skip-group-check", gantt.skip_group_check,
                      "Accept schedules that overload shared groups");

  ValidateArgs val;
  auto* val_cmd = app.add_subcommand("validate", "Check input files");
  val_cmd->add_option("network", val.network, "Network file")->required();
  val_cmd->add_option("request", val.request, "Request file");

  std::vector<std::string> argv_storage{"gridplan"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*plan_cmd) return cmd_plan(plan, out, err);
    if (*sim_cmd) return cmd_simulate(sim, out, err);
    if (*bench_cmd) return cmd_bench(bench_args, out, err);
    if (*gantt_cmd) return cmd_gantt(gantt, out, err);
    if (*val_cmd) return cmd_validate(val, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace gridplan
