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
#include <set>

#include "gridplan/bench.hpp"
#include "gridplan/validate.hpp"

namespace gridplan::bench {
namespace {

using Path = std::vector<std::size_t>;  // link indices, origin to destination

struct Transfer {
  std::size_t link;
  Time duration;
  int prev;           // previous hop of the same demand, or -1
  int twin;           // earlier interchangeable single-hop transfer, or -1
  Time tail;          // total duration of the hops after this one
  std::size_t site;   // site left by this hop
  std::int64_t size;
};

class Enumerator {
 public:
  Enumerator(const Network& network, const OracleOptions& options)
      : network_(network), options_(options) {
    for (const auto& g : network.shared_groups()) {
      std::vector<bool> member(network.links().size(), false);
      for (const auto& m : g.members) {
        if (auto l = network.link_index(m)) member[*l] = true;
      }
      groups_.push_back({std::move(member), g.capacity});
    }
  }

  // Smallest M in [from, to] admitting a schedule, if any.
  std::optional<Time> first_feasible(const std::vector<Transfer>& transfers,
                                     Time from, Time to) {
    transfers_ = &transfers;
    start_.assign(transfers.size(), 0);
    for (Time m = from; m <= to; ++m) {
      horizon_ = m;
      if (place(0)) return m;
    }
    return std::nullopt;
  }

 private:
  struct Group {
    std::vector<bool> member;
    std::int64_t capacity;
  };

  Time end_of(std::size_t j) const {
    return start_[j] + (*transfers_)[j].duration;
  }

  bool fits(std::size_t i, Time s) const {
    const auto& ts = *transfers_;
    const Transfer& t = ts[i];
    const Time e = s + t.duration;
    for (std::size_t j = 0; j < i; ++j) {
      if (ts[j].link == t.link && start_[j] < e && s < end_of(j)) return false;
    }
    if (options_.shared_groups) {
      for (const auto& g : groups_) {
        if (!g.member[t.link]) continue;
        const std::int64_t own = network_.link(t.link).slowdown;
        for (Time tau = s; tau < e; ++tau) {
          std::int64_t load = own;
          for (std::size_t j = 0; j < i; ++j) {
            if (g.member[ts[j].link] && start_[j] <= tau && tau < end_of(j)) {
              load += network_.link(ts[j].link).slowdown;
            }
          }
          if (load > g.capacity) return false;
        }
      }
    }
    if (options_.storage && t.prev >= 0) {
      const auto& storage = network_.site(t.site).storage;
      if (storage) {
        const Time held_from = start_[t.prev];
        for (Time tau = held_from; tau < e; ++tau) {
          std::int64_t load = t.size;
          for (std::size_t j = 0; j < i; ++j) {
            if (ts[j].prev < 0 || ts[j].site != t.site) continue;
            if (start_[ts[j].prev] <= tau && tau < end_of(j)) load += ts[j].size;
          }
          if (load > *storage) return false;
        }
      }
    }
    return true;
  }

  bool place(std::size_t i) {
    const auto& ts = *transfers_;
    if (i == ts.size()) return true;
    const Transfer& t = ts[i];
    Time lo = t.prev >= 0 ? end_of(t.prev) : 0;
    if (t.twin >= 0) lo = std::max(lo, start_[t.twin]);
    const Time hi = horizon_ - t.duration - t.tail;
    for (Time s = lo; s <= hi; ++s) {
      if (!fits(i, s)) continue;
      start_[i] = s;
      if (place(i + 1)) return true;
    }
    return false;
  }

  const Network& network_;
  const OracleOptions& options_;
  std::vector<Group> groups_;
  const std::vector<Transfer>* transfers_ = nullptr;
  std::vector<Time> start_;
  Time horizon_ = 0;
};

void collect_paths(const Network& network, const Demand& demand,
                   std::size_t dest, bool transit, std::size_t max_hops,
                   std::size_t site, Path& current, std::set<std::size_t>& seen,
                   std::vector<Path>& out) {
  for (std::size_t l : network.out_link_indices(site)) {
    const std::size_t to = network.link_to(l);
    if (demand.has_origin(network.site(to).id) || seen.count(to)) continue;
    if (!transit && to != dest) continue;
    current.push_back(l);
    if (current.size() > max_hops) {
      throw OracleLimitError("oracle: demand '" + demand.name +
                             "' has a candidate path longer than " +
                             std::to_string(max_hops) + " links");
    }
    if (to == dest) {
      out.push_back(current);
    } else {
      seen.insert(to);
      collect_paths(network, demand, dest, transit, max_hops, to, current, seen, out);
      seen.erase(to);
    }
    current.pop_back();
  }
}

}  // namespace

std::optional<Time> brute_force_optimal(const Network& network,
                                        const Request& raw_request,
                                        const OracleOptions& options) {
  const Request request = drop_satisfied_demands(raw_request);
  const auto& lim = options.limits;
  std::set<std::string> sources;
  for (const auto& d : request.demands) sources.insert(d.origins.begin(), d.origins.end());
  if (request.demands.size() > lim.max_demands) {
    throw OracleLimitError("oracle: too many demands");
  }
  if (sources.size() > lim.max_sources) throw OracleLimitError("oracle: too many sources");
  if (network.links().size() > lim.max_links) throw OracleLimitError("oracle: too many links");
  auto dest = network.site_index(request.destination);
  if (!dest) throw OracleLimitError("oracle: unknown destination");

  std::vector<std::vector<Path>> choices;
  for (const auto& d : request.demands) {
    std::vector<Path> paths;
    for (const auto& o : d.origins) {
      auto idx = network.site_index(o);
      if (!idx) continue;
      Path current;
      std::set<std::size_t> seen{*idx};
      collect_paths(network, d, *dest, options.allow_transit, lim.max_hops, *idx,
                    current, seen, paths);
    }
    if (paths.empty()) return std::nullopt;
    choices.push_back(std::move(paths));
  }

  Enumerator enumerator(network, options);
  std::optional<Time> best;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    // Transfers for this combination of paths.
    std::vector<Transfer> transfers;
    std::vector<Time> link_load(network.links().size(), 0);
    Time longest = 0;
    Time serial = 0;
    for (std::size_t d = 0; d < choices.size(); ++d) {
      const Path& path = choices[d][pick[d]];
      const Demand& demand = request.demands[d];
      Time total = 0;
      for (std::size_t l : path) total += transfer_duration(demand, network.link(l));
      Time before = 0;
      for (std::size_t h = 0; h < path.size(); ++h) {
        const Time dur = transfer_duration(demand, network.link(path[h]));
        before += dur;
        Transfer t{path[h], dur, h == 0 ? -1 : static_cast<int>(transfers.size()) - 1,
                   -1, total - before, network.link_from(path[h]), demand.size};
        if (path.size() == 1) {
          for (int j = static_cast<int>(transfers.size()) - 1; j >= 0; --j) {
            const Transfer& o = transfers[j];
            if (o.prev < 0 && o.tail == 0 && o.link == t.link && o.duration == t.duration) {
              t.twin = j;
              break;
            }
          }
        }
        transfers.push_back(t);
        link_load[path[h]] += dur;
      }
      longest = std::max(longest, total);
      serial += total;
    }
    Time lower = longest;
    for (Time load : link_load) lower = std::max(lower, load);
    const Time upper = best ? std::min(*best - 1, serial) : serial;
    if (lower <= upper) {
      if (auto m = enumerator.first_feasible(transfers, lower, upper)) best = m;
    }

    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  if (request.demands.empty()) return 0;
  return best;
}

}  // namespace gridplan::bench
