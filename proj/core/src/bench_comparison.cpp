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

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>

#include "gridplan/bench.hpp"
#include "gridplan/model.hpp"
#include "gridplan/p2p.hpp"
#include "gridplan/search.hpp"
#include "gridplan/strategies.hpp"
#include "json_util.hpp"

namespace gridplan::bench {

std::string Method::name() const {
  switch (kind) {
    case Kind::kOptimal:
      return "optimal";
    case Kind::kSymmetry:
      return "optimal+symmetry";
    case Kind::kTimeLimited:
      return "time-limited";
    case Kind::kChunked:
      return "chunked(" + std::to_string(chunk_size) + ")";
    case Kind::kP2P:
      return "p2p";
  }
  return "?";
}

Method Method::parse(std::string_view text) {
  if (text == "optimal") return {Kind::kOptimal};
  if (text == "optimal+symmetry" || text == "symmetry") return {Kind::kSymmetry};
  if (text == "time-limited" || text == "timelimited") return {Kind::kTimeLimited};
  if (text == "p2p") return {Kind::kP2P};
  std::string_view k;
  if (text.starts_with("chunked(") && text.ends_with(")")) {
    k = text.substr(8, text.size() - 9);
  } else if (text.starts_with("chunked:")) {
    k = text.substr(8);
  } else if (text == "chunked") {
    k = "1";
  }
  std::size_t size = 0;
  if (!k.empty()) {
    auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), size);
    if (ec == std::errc() && ptr == k.data() + k.size() && size > 0) {
      return {Kind::kChunked, size};
    }
  }
  throw InputError("unknown method '" + std::string(text) + "'");
}

namespace {

struct RunOutcome {
  std::optional<Time> makespan;
  bool proven = false;
  double wall_ms = 0;
  double nodes = 0;
};

RunOutcome run_method(const Method& method, const Network& network,
                      const Request& request, const ComparisonPlan& plan,
                      std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  RunOutcome out;
  ModelConfig config;
  SearchBudget budget;
  budget.time_limit = plan.cell_budget;
  try {
    switch (method.kind) {
      case Method::Kind::kOptimal:
      case Method::Kind::kSymmetry: {
        config.symmetry_breaking = method.kind == Method::Kind::kSymmetry;
        Model model = build_model(network, request, config);
        auto r = solve(model, budget);
        out.makespan = r.report.best_makespan;
        out.proven = r.report.proven_optimal;
        out.nodes = static_cast<double>(r.report.nodes);
        break;
      }
      case Method::Kind::kTimeLimited: {
        auto r = solve_time_limited(network, request, plan.time_coeff_ms, config);
        out.makespan = r.report.best_makespan;
        out.nodes = static_cast<double>(r.report.nodes);
        break;
      }
      case Method::Kind::kChunked: {
        ChunkOptions options;
        options.chunk_budget = budget;
        auto r = solve_chunked(network, request, method.chunk_size, config, options);
        if (r.schedule) out.makespan = r.schedule->makespan;
        for (const auto& rep : r.reports) out.nodes += static_cast<double>(rep.nodes);
        break;
      }
      case Method::Kind::kP2P: {
        auto r = p2p::simulate(network, request, seed);
        out.makespan = r.schedule.makespan;
        break;
      }
    }
  } catch (const InfeasibleError&) {
  }
  out.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  return out;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0;
  return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

bool is_exact(const Method& m) {
  return m.kind == Method::Kind::kOptimal || m.kind == Method::Kind::kSymmetry;
}

}  // namespace

std::vector<ComparisonRow> run_comparison(const ComparisonPlan& plan) {
  std::vector<ComparisonRow> rows;
  for (std::size_t n : plan.n_files) {
    const std::size_t reps = std::max<std::size_t>(plan.repetitions, 1);
    // outcomes[method][rep]
    std::vector<std::vector<RunOutcome>> outcomes(plan.methods.size());
    std::vector<std::optional<Time>> reference(reps);
    for (std::size_t r = 0; r < reps; ++r) {
      ScenarioSpec spec{plan.origin_case, n, plan.weights, plan.seed + r,
                        plan.network, plan.destination};
      const Request request = generate(spec);
      for (std::size_t m = 0; m < plan.methods.size(); ++m) {
        auto outcome = run_method(plan.methods[m], plan.network, request, plan,
                                  spec.seed);
        if (is_exact(plan.methods[m]) && outcome.proven && !reference[r]) {
          reference[r] = outcome.makespan;
        }
        outcomes[m].push_back(outcome);
      }
    }
    for (std::size_t m = 0; m < plan.methods.size(); ++m) {
      ComparisonRow row;
      row.method = plan.methods[m].name();
      row.origin_case = plan.origin_case;
      row.n_files = n;
      row.repetitions = reps;
      std::vector<double> walls, makespans, losses, nodes;
      for (std::size_t r = 0; r < reps; ++r) {
        const auto& o = outcomes[m][r];
        walls.push_back(o.wall_ms);
        nodes.push_back(o.nodes);
        if (!o.makespan || (is_exact(plan.methods[m]) && !o.proven)) ++row.timeouts;
        if (o.makespan) makespans.push_back(static_cast<double>(*o.makespan));
        if (o.makespan && reference[r] && *reference[r] > 0) {
          losses.push_back(100.0 * static_cast<double>(*o.makespan - *reference[r]) /
                           static_cast<double>(*reference[r]));
        }
      }
      row.median_wall_ms = median(walls);
      row.median_nodes = median(nodes);
      if (makespans.size() == reps) row.median_makespan = median(makespans);
      if (losses.size() == reps) row.loss_pct = median(losses);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows) {
  out << "method,case,n_files,seed_reps,median_wall_ms,median_makespan,loss_pct\n";
  char buffer[64];
  auto number = [&](std::optional<double> v, const char* format) -> std::string {
    if (!v) return "NA";
    std::snprintf(buffer, sizeof buffer, format, *v);
    return buffer;
  };
  for (const auto& r : rows) {
    out << r.method << ',' << to_string(r.origin_case) << ',' << r.n_files << ','
        << r.repetitions << ',' << number(r.median_wall_ms, "%.3f") << ','
        << number(r.median_makespan, "%g") << ',' << number(r.loss_pct, "%.2f")
        << '\n';
  }
}

ComparisonPlan parse_bench_spec(std::string_view text, std::string_view source) {
  using namespace detail;
  const std::string where(source);
  json j = parse_text(text, source);
  require_object(j, where);
  reject_unknown_keys(j, where,
                      {"case", "weights", "seed", "network", "destination",
                       "slowdowns", "n_files", "max_files", "repetitions",
                       "methods", "cell_budget_ms", "time_coeff_ms"});
  ComparisonPlan plan;
  plan.methods = {Method::parse("optimal"), Method::parse("p2p")};
  if (auto it = j.find("case"); it != j.end()) {
    plan.origin_case = parse_origin_case(get_string(*it, where + ".case"));
  }
  if (auto it = j.find("weights"); it != j.end()) {
    if (!it->is_array()) throw InputError(where + ".weights: expected an array");
    plan.weights.clear();
    for (std::size_t i = 0; i < it->size(); ++i) {
      plan.weights.push_back(
          get_number((*it)[i], where + ".weights[" + std::to_string(i) + "]"));
    }
  }
  if (auto it = j.find("seed"); it != j.end()) {
    plan.seed = static_cast<std::uint64_t>(get_int(*it, where + ".seed"));
  }
  if (j.contains("network") && j.contains("slowdowns")) {
    throw InputError(where + ": give either network or slowdowns, not both");
  }
  if (auto it = j.find("network"); it != j.end()) {
    plan.network = network_from_json(*it, where + ".network");
    plan.destination = get_string(require_key(j, where, "destination"),
                                  where + ".destination");
  } else if (j.contains("destination")) {
    throw InputError(where + ".destination: only valid together with network");
  }
  if (auto it = j.find("slowdowns"); it != j.end()) {
    if (!it->is_array()) throw InputError(where + ".slowdowns: expected an array");
    std::vector<std::int64_t> slowdowns;
    for (std::size_t i = 0; i < it->size(); ++i) {
      slowdowns.push_back(
          get_int((*it)[i], where + ".slowdowns[" + std::to_string(i) + "]"));
    }
    plan.network = default_network(slowdowns);
  }
  if (j.contains("n_files") && j.contains("max_files")) {
    throw InputError(where + ": give either n_files or max_files, not both");
  }
  if (auto it = j.find("n_files"); it != j.end()) {
    if (!it->is_array()) throw InputError(where + ".n_files: expected an array");
    plan.n_files.clear();
    for (std::size_t i = 0; i < it->size(); ++i) {
      auto n = get_int((*it)[i], where + ".n_files[" + std::to_string(i) + "]");
      if (n < 1) throw InputError(where + ".n_files: values must be >= 1");
      plan.n_files.push_back(static_cast<std::size_t>(n));
    }
  }
  if (auto it = j.find("max_files"); it != j.end()) {
    auto n = get_int(*it, where + ".max_files");
    if (n < 1) throw InputError(where + ".max_files: must be >= 1");
    plan.n_files.clear();
    for (std::int64_t i = 1; i <= n; ++i) plan.n_files.push_back(static_cast<std::size_t>(i));
  }
  if (auto it = j.find("repetitions"); it != j.end()) {
    auto n = get_int(*it, where + ".repetitions");
    if (n < 1) throw InputError(where + ".repetitions: must be >= 1");
    plan.repetitions = static_cast<std::size_t>(n);
  }
  if (auto it = j.find("methods"); it != j.end()) {
    if (!it->is_array()) throw InputError(where + ".methods: expected an array");
    plan.methods.clear();
    for (std::size_t i = 0; i < it->size(); ++i) {
      plan.methods.push_back(Method::parse(
          get_string((*it)[i], where + ".methods[" + std::to_string(i) + "]")));
    }
  }
  if (auto it = j.find("cell_budget_ms"); it != j.end()) {
    auto ms = get_int(*it, where + ".cell_budget_ms");
    if (ms < 0) throw InputError(where + ".cell_budget_ms: must be >= 0");
    plan.cell_budget = std::chrono::milliseconds(ms);
  }
  if (auto it = j.find("time_coeff_ms"); it != j.end()) {
    plan.time_coeff_ms = get_number(*it, where + ".time_coeff_ms");
    if (plan.time_coeff_ms < 0) throw InputError(where + ".time_coeff_ms: must be >= 0");
  }
  return plan;
}

}  // namespace gridplan::bench
