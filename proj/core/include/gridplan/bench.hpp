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

#ifndef GRIDPLAN_BENCH_HPP
#define GRIDPLAN_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gridplan/network.hpp"

namespace gridplan::bench {

// How file replicas are spread over the source sites.
enum class OriginCase {
  kDistinct,  // each file at exactly one site, uniformly at random
  kWeighted,  // each site holds each file with its own probability
  kShared,    // every file at every source site
};

const char* to_string(OriginCase c);
OriginCase parse_origin_case(std::string_view text);

// Weights used for the weighted case by default.
inline const std::vector<double> kDefaultWeights = {1.0, 0.6, 0.01, 0.01};

// Four source sites Site_1..Site_4, each with one direct link L1..L4 into
// the destination "Dest". Slowdowns default to {1, 2, 4, 8}.
Network default_network(std::span<const std::int64_t> slowdowns = {});
inline constexpr const char* kDefaultDestination = "Dest";

// All sites except the destination, in declaration order.
std::vector<std::string> source_sites(const Network& network,
                                      const std::string& destination);

struct ScenarioSpec {
  OriginCase origin_case = OriginCase::kShared;
  std::size_t n_files = 1;
  std::vector<double> weights = kDefaultWeights;
  std::uint64_t seed = 0;
  Network network = default_network();
  std::string destination = kDefaultDestination;
};

// Unit-size demands f001, f002, ... drawn from the seed. Throws
// InputError for an invalid spec (weighted case: one weight per source
// site and a maximum of exactly 1.0).
Request generate(const ScenarioSpec& spec);

struct OracleLimits {
  std::size_t max_sources = 4;
  std::size_t max_demands = 4;
  std::size_t max_links = 6;
  // Longest candidate path, in links.
  std::size_t max_hops = 2;
};

struct OracleOptions {
  bool allow_transit = false;
  bool storage = false;
  bool shared_groups = false;
  OracleLimits limits;
};

class OracleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact minimum makespan by exhaustive enumeration: every combination of
// candidate paths, then every start-time vector up to the best makespan
// so far. Pure predicates only; shares nothing with the CP solver.
// nullopt when the instance is infeasible. Throws OracleLimitError when
// the instance exceeds `options.limits`.
std::optional<Time> brute_force_optimal(const Network& network,
                                        const Request& request,
                                        const OracleOptions& options = {});

struct Method {
  enum class Kind { kOptimal, kSymmetry, kTimeLimited, kChunked, kP2P };
  Kind kind = Kind::kOptimal;
  std::size_t chunk_size = 1;

  // "optimal", "optimal+symmetry", "time-limited", "chunked(k)", "p2p".
  std::string name() const;
  // Accepts the names above plus "symmetry", "timelimited", "chunked:k".
  static Method parse(std::string_view text);
};

struct ComparisonPlan {
  OriginCase origin_case = OriginCase::kWeighted;
  std::vector<double> weights = kDefaultWeights;
  Network network = default_network();
  std::string destination = kDefaultDestination;
  std::vector<std::size_t> n_files = {1, 2, 3, 4};
  std::vector<Method> methods;
  std::size_t repetitions = 3;
  std::uint64_t seed = 0;
  // Search budget of one run of an exact method (and of each chunk).
  std::chrono::milliseconds cell_budget{10000};
  double time_coeff_ms = 100.0;
};

struct ComparisonRow {
  std::string method;
  OriginCase origin_case = OriginCase::kWeighted;
  std::size_t n_files = 0;
  std::size_t repetitions = 0;
  double median_wall_ms = 0;
  // Absent when some repetition produced no schedule.
  std::optional<double> median_makespan;
  // Median per-repetition loss against a proven optimum; absent when the
  // optimum is unknown for some repetition.
  std::optional<double> loss_pct;
  double median_nodes = 0;
  // Repetitions without a schedule, or without an optimality proof for
  // the exact methods.
  std::size_t timeouts = 0;
};

// Runs every method on seeds seed .. seed + repetitions - 1 for each
// n_files value. Rows are ordered by n_files, then by method order.
std::vector<ComparisonRow> run_comparison(const ComparisonPlan& plan);

// `method,case,n_files,seed_reps,median_wall_ms,median_makespan,loss_pct`;
// absent values are written as NA.
void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows);

// Scenario/bench spec in the network file format family, e.g.
//   {"case": "weighted", "weights": [1.0, 0.6, 0.01, 0.01], "seed": 0,
//    "n_files": [2, 4, 6], "repetitions": 3, "methods": ["optimal", "p2p"],
//    "cell_budget_ms": 10000, "time_coeff_ms": 100,
//    "network": {...}, "destination": "Dest"}
// Every key is optional; "max_files": N is shorthand for n_files 1..N and
// "slowdowns" configures the default network.
ComparisonPlan parse_bench_spec(std::string_view text,
                                std::string_view source = "bench spec");

}  // namespace gridplan::bench

#endif  // GRIDPLAN_BENCH_HPP
