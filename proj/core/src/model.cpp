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

#include "gridplan/model.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

#include "gridplan/strategies.hpp"
#include "gridplan/validate.hpp"

namespace gridplan {

std::int64_t slowdown_consumption(const Link& link) { return link.slowdown; }

std::optional<std::size_t> Model::slot_of(std::size_t demand,
                                          std::size_t link) const {
  for (std::size_t s : demand_slots_[demand]) {
    if (slots_[s].link == link) return s;
  }
  return std::nullopt;
}

bool Model::propagate(Domains& d) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : propagators_) {
      if (!p->propagate(d, changed)) return false;
    }
  }
  return true;
}

void Model::add_propagator(std::shared_ptr<const Propagator> p) {
  propagators_.push_back(std::move(p));
}

Reservations reservations_from(const Schedule& schedule, const Network& network,
                               const std::string& destination) {
  Reservations r;
  std::map<std::string, std::vector<const ScheduleEntry*>> by_demand;
  for (const auto& e : schedule.entries) {
    r.links.push_back({e.link, e.start, e.end});
    by_demand[e.demand].push_back(&e);
  }
  for (auto& [name, entries] : by_demand) {
    std::sort(entries.begin(), entries.end(),
              [](auto* a, auto* b) { return a->start < b->start; });
    for (std::size_t k = 0; k + 1 < entries.size(); ++k) {
      auto in = network.link_index(entries[k]->link);
      if (!in) continue;
      const Link& link = network.link(*in);
      auto site = network.site_index(link.to);
      if (!site || link.to == destination || !network.site(*site).storage) {
        continue;
      }
      const std::int64_t size =
          (entries[k]->end - entries[k]->start) / link.slowdown;
      r.storage.push_back({link.to, entries[k]->start, entries[k + 1]->end, size});
    }
  }
  return r;
}

namespace {

constexpr Time kUnreached = std::numeric_limits<Time>::max();

// Sorted, disjoint busy intervals of one link.
class BusyList {
 public:
  void add(Time start, Time end) {
    auto it = std::lower_bound(busy_.begin(), busy_.end(),
                               std::make_pair(start, end));
    busy_.insert(it, {start, end});
  }

  Time earliest(Time from, Time length) const {
    Time s = from;
    for (const auto& [b, e] : busy_) {
      if (e <= s) continue;
      if (b >= s + length) break;
      s = e;
    }
    return s;
  }

 private:
  std::vector<std::pair<Time, Time>> busy_;
};

// Links a demand may use in the greedy plans: consumption must fit every
// enforced group, and with storage enforced a file can only enter sites
// that can hold it.
std::vector<bool> usable_links(const Network& network, const ModelConfig& config,
                               const Demand& demand, std::size_t dest) {
  std::vector<bool> ok(network.links().size(), true);
  if (config.enforce_shared_groups) {
    for (const auto& g : network.shared_groups()) {
      for (const auto& m : g.members) {
        auto l = network.link_index(m);
        if (l && config.shared_consumption(network.link(*l)) > g.capacity) {
          ok[*l] = false;
        }
      }
    }
  }
  if (config.enforce_storage) {
    for (std::size_t l = 0; l < ok.size(); ++l) {
      const std::size_t to = network.link_to(l);
      if (to == dest || to >= network.sites().size()) continue;
      const auto& storage = network.site(to).storage;
      if (storage && *storage < demand.size) ok[l] = false;
    }
  }
  return ok;
}

bool link_allowed(const Network& network, const ModelConfig& config,
                  const Demand& demand, std::size_t dest, std::size_t link) {
  const std::size_t from = network.link_from(link);
  const std::size_t to = network.link_to(link);
  if (from == dest) return false;
  if (demand.has_origin(network.site(to).id)) return false;
  if (!config.allow_transit) {
    return to == dest && demand.has_origin(network.site(from).id);
  }
  return true;
}

// Earliest-arrival path for one demand given per-link availability.
// `start_at` is the release time at every origin. Returns the link
// indices with their start times, or nothing when unreachable.
std::optional<std::vector<std::pair<std::size_t, Time>>> earliest_path(
    const Network& network, const ModelConfig& config,
    const std::vector<bool>& link_ok, const Demand& demand, std::size_t dest,
    Time start_at, const std::vector<BusyList>* busy) {
  const std::size_t n = network.sites().size();
  std::vector<Time> arrival(n, kUnreached);
  std::vector<std::pair<std::size_t, Time>> via(n, {0, 0});
  std::vector<bool> root(n, false);
  std::vector<bool> done(n, false);
  using Entry = std::pair<Time, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (const auto& o : demand.origins) {
    auto idx = network.site_index(o);
    if (!idx) continue;
    arrival[*idx] = start_at;
    root[*idx] = true;
    queue.push({start_at, *idx});
  }
  while (!queue.empty()) {
    auto [t, site] = queue.top();
    queue.pop();
    if (done[site]) continue;
    done[site] = true;
    if (site == dest) break;
    for (std::size_t l : network.out_link_indices(site)) {
      if (!link_ok[l] || !link_allowed(network, config, demand, dest, l)) {
        continue;
      }
      const Time duration = transfer_duration(demand, network.link(l));
      const Time s = busy ? (*busy)[l].earliest(t, duration) : t;
      const std::size_t to = network.link_to(l);
      if (s + duration < arrival[to]) {
        arrival[to] = s + duration;
        via[to] = {l, s};
        queue.push({arrival[to], to});
      }
    }
  }
  if (arrival[dest] == kUnreached) return std::nullopt;
  std::vector<std::pair<std::size_t, Time>> path;
  for (std::size_t site = dest; !root[site]; site = network.link_from(via[site].first)) {
    path.push_back(via[site]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<Schedule> greedy_schedule(const Network& network,
                                        const Request& request,
                                        const ModelConfig& config,
                                        const Reservations& reservations) {
  auto dest = network.site_index(request.destination);
  if (!dest) return std::nullopt;

  Time released = 0;
  for (const auto& f : reservations.links) released = std::max(released, f.end);
  for (const auto& h : reservations.storage) released = std::max(released, h.end);

  // Serialized plan: one transfer in flight at a time, after everything
  // reserved. Always feasible when each demand has a usable path alone.
  Schedule serial;
  Time clock = released;
  for (const auto& demand : request.demands) {
    auto ok = usable_links(network, config, demand, *dest);
    auto path = earliest_path(network, config, ok, demand, *dest, clock, nullptr);
    if (!path) return std::nullopt;
    for (auto [l, s] : *path) {
      serial.entries.push_back(
          {demand.name, network.link(l).id, s,
           s + transfer_duration(demand, network.link(l))});
    }
    clock = serial.entries.back().end;
  }
  normalize(serial);

  const bool interacting =
      (config.enforce_shared_groups && !network.shared_groups().empty()) ||
      (config.enforce_storage && config.allow_transit);
  if (interacting) return serial;

  // List schedule: each demand takes its earliest-arrival path given the
  // transfers already placed.
  std::vector<BusyList> busy(network.links().size());
  for (const auto& f : reservations.links) {
    if (auto l = network.link_index(f.link)) busy[*l].add(f.start, f.end);
  }
  Schedule listed;
  for (const auto& demand : request.demands) {
    auto ok = usable_links(network, config, demand, *dest);
    auto path = earliest_path(network, config, ok, demand, *dest, 0, &busy);
    if (!path) return std::nullopt;
    for (auto [l, s] : *path) {
      const Time end = s + transfer_duration(demand, network.link(l));
      busy[l].add(s, end);
      listed.entries.push_back({demand.name, network.link(l).id, s, end});
    }
  }
  normalize(listed);
  return listed.makespan <= serial.makespan ? listed : serial;
}

Model build_model(const Network& network, const Request& raw_request,
                  const ModelConfig& config, const Reservations& reservations) {
  Model m;
  m.network_ = network;
  m.request_ = drop_satisfied_demands(raw_request);
  m.config_ = config;
  const Request& request = m.request_;

  auto dest_index = network.site_index(request.destination);
  if (!dest_index) {
    throw InfeasibleError("destination '" + request.destination +
                          "' is not a site of the network");
  }
  const std::size_t dest = *dest_index;
  const std::size_t n_sites = network.sites().size();

  // Variables.
  m.demand_slots_.resize(request.demands.size());
  for (std::size_t d = 0; d < request.demands.size(); ++d) {
    const Demand& demand = request.demands[d];
    bool reaches_dest = false;
    for (std::size_t l = 0; l < network.links().size(); ++l) {
      if (network.link_from(l) >= n_sites || network.link_to(l) >= n_sites) continue;
      if (!link_allowed(network, config, demand, dest, l)) continue;
      m.demand_slots_[d].push_back(m.slots_.size());
      m.slots_.push_back({d, l, transfer_duration(demand, network.link(l))});
      reaches_dest = reaches_dest || network.link_to(l) == dest;
    }
    if (!reaches_dest) {
      throw InfeasibleError("demand '" + demand.name +
                            "' has no link into the destination");
    }
  }

  // Path constraints and chaining, per demand.
  for (std::size_t d = 0; d < request.demands.size(); ++d) {
    const Demand& demand = request.demands[d];
    std::vector<RoutingSum::Term> leave_origins;
    std::vector<RoutingSum::Term> enter_dest;
    std::vector<std::vector<std::size_t>> in_at(n_sites), out_at(n_sites);
    for (std::size_t s : m.demand_slots_[d]) {
      const std::size_t from = network.link_from(m.slots_[s].link);
      const std::size_t to = network.link_to(m.slots_[s].link);
      if (demand.has_origin(network.site(from).id)) leave_origins.push_back({s, 1});
      if (to == dest) enter_dest.push_back({s, 1});
      out_at[from].push_back(s);
      in_at[to].push_back(s);
    }
    m.propagators_.push_back(std::make_shared<RoutingSum>(leave_origins, 1, 1));
    if (config.allow_transit) {
      m.propagators_.push_back(std::make_shared<RoutingSum>(enter_dest, 1, 1));
    }
    for (std::size_t n = 0; n < n_sites; ++n) {
      if (n == dest || demand.has_origin(network.site(n).id)) continue;
      if (in_at[n].empty() && out_at[n].empty()) continue;
      std::vector<RoutingSum::Term> ins, outs, balance;
      std::vector<TransitChaining::Arc> in_arcs, out_arcs;
      for (std::size_t s : in_at[n]) {
        ins.push_back({s, 1});
        balance.push_back({s, 1});
        in_arcs.push_back({s, m.slots_[s].duration});
      }
      for (std::size_t s : out_at[n]) {
        outs.push_back({s, 1});
        balance.push_back({s, -1});
        out_arcs.push_back({s, m.slots_[s].duration});
      }
      if (ins.size() > 1) m.propagators_.push_back(std::make_shared<RoutingSum>(ins, 0, 1));
      if (outs.size() > 1) m.propagators_.push_back(std::make_shared<RoutingSum>(outs, 0, 1));
      m.propagators_.push_back(std::make_shared<RoutingSum>(balance, 0, 0));
      if (!in_arcs.empty() && !out_arcs.empty()) {
        m.propagators_.push_back(
            std::make_shared<TransitChaining>(in_arcs, out_arcs));
      }
    }
  }

  // One unary resource per link.
  std::vector<std::vector<Reservation>> link_fixed(network.links().size());
  for (const auto& f : reservations.links) {
    if (auto l = network.link_index(f.link)) {
      link_fixed[*l].push_back({f.start, f.end, 1});
    }
  }
  std::vector<std::vector<ResourceTask>> link_tasks(network.links().size());
  for (std::size_t s = 0; s < m.slots_.size(); ++s) {
    link_tasks[m.slots_[s].link].push_back({s, m.slots_[s].duration, 1});
  }
  for (std::size_t l = 0; l < network.links().size(); ++l) {
    if (link_tasks[l].empty()) continue;
    m.propagators_.push_back(std::make_shared<CumulativeResource>(
        link_tasks[l], link_fixed[l], 1, config.overload_checking));
  }

  if (config.enforce_shared_groups) {
    for (const auto& group : network.shared_groups()) {
      std::vector<ResourceTask> tasks;
      std::vector<Reservation> fixed;
      for (const auto& member : group.members) {
        auto l = network.link_index(member);
        if (!l) continue;
        const std::int64_t amount = config.shared_consumption(network.link(*l));
        for (const auto& t : link_tasks[*l]) tasks.push_back({t.slot, t.duration, amount});
        for (const auto& f : link_fixed[*l]) fixed.push_back({f.start, f.end, amount});
      }
      if (tasks.empty()) continue;
      m.propagators_.push_back(std::make_shared<CumulativeResource>(
          tasks, fixed, group.capacity, config.overload_checking));
    }
  }

  if (config.enforce_storage && config.allow_transit) {
    for (std::size_t n = 0; n < n_sites; ++n) {
      const Site& site = network.site(n);
      if (!site.storage || n == dest) continue;
      std::vector<StorageResource::Task> tasks;
      for (std::size_t d = 0; d < request.demands.size(); ++d) {
        const Demand& demand = request.demands[d];
        if (demand.has_origin(site.id)) continue;
        for (std::size_t i : m.demand_slots_[d]) {
          if (network.link_to(m.slots_[i].link) != n) continue;
          for (std::size_t o : m.demand_slots_[d]) {
            if (network.link_from(m.slots_[o].link) != n) continue;
            const std::size_t c = m.storage_pairs_.size();
            m.storage_pairs_.push_back({d, n, i, o});
            m.propagators_.push_back(std::make_shared<ChannelAnd>(c, i, o));
            tasks.push_back({c, i, m.slots_[i].duration, o,
                             m.slots_[o].duration, demand.size});
          }
        }
      }
      std::vector<Reservation> fixed;
      for (const auto& h : reservations.storage) {
        if (h.site == site.id) fixed.push_back({h.start, h.end, h.amount});
      }
      if (tasks.empty()) continue;
      m.propagators_.push_back(
          std::make_shared<StorageResource>(tasks, fixed, *site.storage));
    }
  }

  if (config.symmetry_breaking) add_symmetry_breaking(m);

  // Domains.
  Time horizon = 0;
  if (config.horizon_override) {
    horizon = *config.horizon_override;
  } else {
    auto greedy = greedy_schedule(network, request, config, reservations);
    if (!greedy) {
      throw InfeasibleError("some demand has no usable path to '" +
                            request.destination + "'");
    }
    horizon = greedy->makespan;
  }
  m.horizon_ = horizon;

  std::vector<Time> durations;
  durations.reserve(m.slots_.size());
  for (const auto& s : m.slots_) durations.push_back(s.duration);
  m.propagators_.push_back(std::make_shared<MakespanBound>(durations));

  Domains& d = m.initial_;
  d.routed.assign(m.slots_.size(), Tri::kUnknown);
  d.lo.assign(m.slots_.size(), 0);
  d.hi.resize(m.slots_.size());
  for (std::size_t s = 0; s < m.slots_.size(); ++s) {
    d.hi[s] = horizon - m.slots_[s].duration;
    if (d.hi[s] < 0) d.routed[s] = Tri::kFalse;
  }
  d.channel.assign(m.storage_pairs_.size(), Tri::kUnknown);
  d.bound = horizon;
  return m;
}

}  // namespace gridplan
