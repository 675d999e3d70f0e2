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

#ifndef GRIDPLAN_MODEL_HPP
#define GRIDPLAN_MODEL_HPP

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridplan/domains.hpp"
#include "gridplan/network.hpp"
#include "gridplan/propagators.hpp"
#include "gridplan/schedule.hpp"

namespace gridplan {

// The instance cannot have any solution (e.g. a demand with no usable
// path to the destination). Raised before search starts.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Amount of a shared group's capacity used by one transfer on `link`.
using ConsumptionFn = std::function<std::int64_t(const Link& link)>;

// Consumption equal to the link's slowdown factor. Slower links eat more
// of the router; the reciprocal reading is available through the hook.
std::int64_t slowdown_consumption(const Link& link);

struct ModelConfig {
  // false: paths of length one only (origin -> destination links).
  bool allow_transit = false;
  bool enforce_shared_groups = false;
  bool enforce_storage = false;
  bool symmetry_breaking = false;
  std::optional<Time> horizon_override;
  // Energy overload check on top of timetable filtering.
  bool overload_checking = true;
  ConsumptionFn shared_consumption = slowdown_consumption;
};

// A committed transfer from an earlier plan; occupies its link (and any
// shared group containing it) over [start, end).
struct FakeTask {
  std::string link;
  Time start = 0;
  Time end = 0;
};

// Storage held at a site by an earlier plan.
struct StorageHold {
  std::string site;
  Time start = 0;
  Time end = 0;
  std::int64_t amount = 0;
};

struct Reservations {
  std::vector<FakeTask> links;
  std::vector<StorageHold> storage;
};

// Reservations that reproduce the resource usage of `schedule`: one fake
// task per entry and, for transit sites with bounded storage, one hold per
// arrival/departure pair. Sizes are recovered from durations.
Reservations reservations_from(const Schedule& schedule, const Network& network,
                               const std::string& destination);

// One (demand, link) decision: routing variable + start-time variable.
struct Slot {
  std::size_t demand = 0;  // index into Model::request().demands
  std::size_t link = 0;    // index into Model::network().links()
  Time duration = 0;
};

// A possible pass of one demand through a bounded site.
struct StoragePair {
  std::size_t demand = 0;
  std::size_t site = 0;
  std::size_t in_slot = 0;
  std::size_t out_slot = 0;
};

// Constraint model for one request. Holds the variables' initial domains
// and the propagators; the search copies Domains and never mutates the
// model. Copies share the (immutable) propagators.
class Model {
 public:
  const Network& network() const { return network_; }
  // The planned request: demands already at the destination are removed.
  const Request& request() const { return request_; }
  const ModelConfig& config() const { return config_; }

  std::span<const Slot> slots() const { return slots_; }
  std::span<const StoragePair> storage_pairs() const { return storage_pairs_; }
  // Slots of demand `d`, in link declaration order.
  std::span<const std::size_t> demand_slots(std::size_t d) const {
    return demand_slots_[d];
  }
  std::optional<std::size_t> slot_of(std::size_t demand, std::size_t link) const;

  // Upper bound on every transfer end (start domains are [0, horizon - d]).
  Time horizon() const { return horizon_; }
  const Domains& initial_domains() const { return initial_; }

  // Runs all propagators to a fixpoint. Returns false on conflict.
  bool propagate(Domains& d) const;

  void add_propagator(std::shared_ptr<const Propagator> p);
  std::size_t propagator_count() const { return propagators_.size(); }

 private:
  friend Model build_model(const Network&, const Request&, const ModelConfig&,
                           const Reservations&);
  Model() = default;

  Network network_;
  Request request_;
  ModelConfig config_;
  std::vector<Slot> slots_;
  std::vector<std::vector<std::size_t>> demand_slots_;
  std::vector<StoragePair> storage_pairs_;
  std::vector<std::shared_ptr<const Propagator>> propagators_;
  Domains initial_;
  Time horizon_ = 0;
};

// Builds the routing/timing model of `request` on `network`. Inputs are
// expected to be validated. Throws InfeasibleError when some demand has no
// usable path at all.
Model build_model(const Network& network, const Request& request,
                  const ModelConfig& config = {},
                  const Reservations& reservations = {});

// Feasible schedule built one demand at a time (earliest-arrival path,
// or a fully serialized fallback when shared groups or storage are
// enforced). Used to bound start domains. nullopt when some demand has no
// usable path.
std::optional<Schedule> greedy_schedule(const Network& network,
                                        const Request& request,
                                        const ModelConfig& config,
                                        const Reservations& reservations = {});

}  // namespace gridplan

#endif  // GRIDPLAN_MODEL_HPP
