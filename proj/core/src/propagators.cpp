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

#include "gridplan/propagators.hpp"

#include <algorithm>
#include <limits>

namespace gridplan {
namespace {

constexpr Time kNever = std::numeric_limits<Time>::max() / 4;

struct Part {
  Time start;
  Time end;
  std::int64_t amount;
};

struct Segment {
  Time start;
  Time end;
  std::int64_t height;
};

// Step function of the summed parts, keeping only positive heights.
std::vector<Segment> build_profile(const std::vector<Part>& parts) {
  std::vector<std::pair<Time, std::int64_t>> events;
  events.reserve(parts.size() * 2);
  for (const auto& p : parts) {
    events.emplace_back(p.start, p.amount);
    events.emplace_back(p.end, -p.amount);
  }
  std::sort(events.begin(), events.end());
  std::vector<Segment> profile;
  std::int64_t height = 0;
  for (std::size_t i = 0; i < events.size();) {
    const Time t = events[i].first;
    while (i < events.size() && events[i].first == t) height += events[i++].second;
    if (height > 0 && i < events.size()) {
      profile.push_back({t, events[i].first, height});
    }
  }
  return profile;
}

// The mass contributed by the task being filtered, to be discounted from
// the profile.
struct Own {
  Time start = 0;
  Time end = 0;
  std::int64_t amount = 0;

  std::int64_t within(const Segment& s) const {
    return (s.start >= start && s.end <= end) ? amount : 0;
  }
};

// Earliest s >= from such that [s, s + length) fits next to the profile.
Time earliest_fit(const std::vector<Segment>& profile, Time from, Time length,
                  std::int64_t amount, std::int64_t capacity, const Own& own) {
  auto it = std::upper_bound(
      profile.begin(), profile.end(), from,
      [](Time t, const Segment& s) { return t < s.end; });
  Time s = from;
  for (; it != profile.end(); ++it) {
    if (it->start >= s + length) break;
    if (it->height - own.within(*it) + amount > capacity) s = it->end;
  }
  return s;
}

// Latest e <= until such that [e - length, e) fits next to the profile.
Time latest_fit(const std::vector<Segment>& profile, Time until, Time length,
                std::int64_t amount, std::int64_t capacity, const Own& own) {
  Time e = until;
  auto it = std::lower_bound(
      profile.begin(), profile.end(), until,
      [](const Segment& s, Time t) { return s.start < t; });
  while (it != profile.begin()) {
    --it;
    if (it->end <= e - length) break;
    if (it->height - own.within(*it) + amount > capacity) e = it->start;
  }
  return e;
}

bool exceeds(const std::vector<Segment>& profile, std::int64_t capacity) {
  for (const auto& s : profile) {
    if (s.height > capacity) return true;
  }
  return false;
}

}  // namespace

CumulativeResource::CumulativeResource(std::vector<ResourceTask> tasks,
                                       std::vector<Reservation> fixed,
                                       std::int64_t capacity,
                                       bool overload_checking)
    : tasks_(std::move(tasks)),
      fixed_(std::move(fixed)),
      capacity_(capacity),
      overload_checking_(overload_checking) {}

bool CumulativeResource::propagate(Domains& d, bool& changed) const {
  std::vector<Part> parts;
  parts.reserve(fixed_.size() + tasks_.size());
  for (const auto& r : fixed_) parts.push_back({r.start, r.end, r.amount});
  for (const auto& t : tasks_) {
    if (d.chosen(t.slot) && d.hi[t.slot] < d.lo[t.slot] + t.duration) {
      parts.push_back({d.hi[t.slot], d.lo[t.slot] + t.duration, t.amount});
    }
  }
  const auto profile = build_profile(parts);
  if (exceeds(profile, capacity_)) return false;

  for (const auto& t : tasks_) {
    if (!d.possible(t.slot)) continue;
    if (t.amount > capacity_) {
      if (!d.fix_routed(t.slot, false, changed)) return false;
      continue;
    }
    Own own;
    if (d.chosen(t.slot) && d.hi[t.slot] < d.lo[t.slot] + t.duration) {
      own = {d.hi[t.slot], d.lo[t.slot] + t.duration, t.amount};
    }
    const Time hi_end = d.hi[t.slot] + t.duration;
    const Time s =
        earliest_fit(profile, d.lo[t.slot], t.duration, t.amount, capacity_, own);
    if (!d.raise_start(t.slot, s, changed)) return false;
    if (!d.possible(t.slot)) continue;
    const Time e =
        latest_fit(profile, hi_end, t.duration, t.amount, capacity_, own);
    if (!d.lower_start(t.slot, e - t.duration, changed)) return false;
  }
  return !overload_checking_ || overload_check(d, changed);
}

bool CumulativeResource::overload_check(Domains& d, bool& changed) const {
  struct Item {
    Time est;
    Time lct;
    std::int64_t energy;
  };
  std::vector<Item> items;
  items.reserve(fixed_.size() + tasks_.size());
  for (const auto& r : fixed_) {
    items.push_back({r.start, r.end, r.amount * (r.end - r.start)});
  }
  for (const auto& t : tasks_) {
    if (d.chosen(t.slot)) {
      items.push_back({d.lo[t.slot], d.hi[t.slot] + t.duration,
                       t.amount * t.duration});
    }
  }
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.lct < b.lct; });

  Time hull_est = kNever;
  Time hull_lct = -kNever;
  std::int64_t total = 0;
  for (const auto& it : items) {
    hull_est = std::min(hull_est, it.est);
    hull_lct = std::max(hull_lct, it.lct);
    total += it.energy;
  }

  std::vector<Time> starts;
  starts.reserve(items.size());
  for (const auto& it : items) starts.push_back(it.est);
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  for (Time from : starts) {
    std::int64_t energy = 0;
    for (const auto& it : items) {
      if (it.est < from) continue;
      energy += it.energy;
      if (energy > capacity_ * (it.lct - from)) return false;
    }
  }

  for (const auto& t : tasks_) {
    if (d.routed[t.slot] != Tri::kUnknown) continue;
    const Time est = d.lo[t.slot];
    const Time lct = d.hi[t.slot] + t.duration;
    const std::int64_t own = t.amount * t.duration;
    std::int64_t inside = 0;
    for (const auto& it : items) {
      if (it.est >= est && it.lct <= lct) inside += it.energy;
    }
    bool fits = own + inside <= capacity_ * (lct - est);
    if (fits && !items.empty()) {
      const Time lo = std::min(est, hull_est);
      const Time hi = std::max(lct, hull_lct);
      fits = own + total <= capacity_ * (hi - lo);
    }
    if (!fits && !d.fix_routed(t.slot, false, changed)) return false;
  }
  return true;
}

RoutingSum::RoutingSum(std::vector<Term> terms, int lower, int upper)
    : terms_(std::move(terms)), lower_(lower), upper_(upper) {}

bool RoutingSum::propagate(Domains& d, bool& changed) const {
  bool again = true;
  while (again) {
    again = false;
    int min_sum = 0;
    int max_sum = 0;
    for (const auto& t : terms_) {
      switch (d.routed[t.slot]) {
        case Tri::kTrue:
          min_sum += t.coeff;
          max_sum += t.coeff;
          break;
        case Tri::kUnknown:
          (t.coeff > 0 ? max_sum : min_sum) += t.coeff;
          break;
        case Tri::kFalse:
          break;
      }
    }
    if (min_sum > upper_ || max_sum < lower_) return false;
    for (const auto& t : terms_) {
      if (d.routed[t.slot] != Tri::kUnknown) continue;
      // Sum range when the variable is fixed to 1 / to 0.
      const int min1 = t.coeff > 0 ? min_sum + t.coeff : min_sum;
      const int max1 = t.coeff > 0 ? max_sum : max_sum + t.coeff;
      const int min0 = t.coeff > 0 ? min_sum : min_sum - t.coeff;
      const int max0 = t.coeff > 0 ? max_sum - t.coeff : max_sum;
      const bool one_ok = min1 <= upper_ && max1 >= lower_;
      const bool zero_ok = min0 <= upper_ && max0 >= lower_;
      if (!one_ok && !zero_ok) return false;
      if (one_ok != zero_ok) {
        if (!d.fix_routed(t.slot, one_ok, changed)) return false;
        again = true;
      }
    }
  }
  return true;
}

TransitChaining::TransitChaining(std::vector<Arc> incoming,
                                 std::vector<Arc> outgoing)
    : incoming_(std::move(incoming)), outgoing_(std::move(outgoing)) {}

bool TransitChaining::propagate(Domains& d, bool& changed) const {
  Time arrival = kNever;
  for (const auto& a : incoming_) {
    if (d.possible(a.slot)) arrival = std::min(arrival, d.lo[a.slot] + a.duration);
  }
  Time departure = -kNever;
  for (const auto& a : outgoing_) {
    if (d.possible(a.slot)) departure = std::max(departure, d.hi[a.slot]);
  }
  for (const auto& a : outgoing_) {
    if (!d.possible(a.slot)) continue;
    const bool ok = arrival == kNever ? d.fix_routed(a.slot, false, changed)
                                      : d.raise_start(a.slot, arrival, changed);
    if (!ok) return false;
  }
  for (const auto& a : incoming_) {
    if (!d.possible(a.slot)) continue;
    const bool ok =
        departure == -kNever
            ? d.fix_routed(a.slot, false, changed)
            : d.lower_start(a.slot, departure - a.duration, changed);
    if (!ok) return false;
  }
  return true;
}

ChannelAnd::ChannelAnd(std::size_t channel, std::size_t in_slot,
                       std::size_t out_slot)
    : channel_(channel), in_(in_slot), out_(out_slot) {}

bool ChannelAnd::propagate(Domains& d, bool& changed) const {
  const Tri in = d.routed[in_];
  const Tri out = d.routed[out_];
  if (in == Tri::kFalse || out == Tri::kFalse) {
    return d.fix_channel(channel_, false, changed);
  }
  if (in == Tri::kTrue && out == Tri::kTrue) {
    return d.fix_channel(channel_, true, changed);
  }
  if (d.channel[channel_] == Tri::kTrue) {
    return d.fix_routed(in_, true, changed) && d.fix_routed(out_, true, changed);
  }
  if (d.channel[channel_] == Tri::kFalse) {
    if (in == Tri::kTrue) return d.fix_routed(out_, false, changed);
    if (out == Tri::kTrue) return d.fix_routed(in_, false, changed);
  }
  return true;
}

StorageResource::StorageResource(std::vector<Task> tasks,
                                 std::vector<Reservation> fixed,
                                 std::int64_t capacity)
    : tasks_(std::move(tasks)), fixed_(std::move(fixed)), capacity_(capacity) {}

bool StorageResource::propagate(Domains& d, bool& changed) const {
  auto held = [&](const Task& t) -> std::pair<Time, Time> {
    return {d.hi[t.in_slot], d.lo[t.out_slot] + t.out_duration};
  };
  std::vector<Part> parts;
  for (const auto& r : fixed_) parts.push_back({r.start, r.end, r.amount});
  for (const auto& t : tasks_) {
    if (d.channel[t.channel] != Tri::kTrue) continue;
    auto [s, e] = held(t);
    if (s < e) parts.push_back({s, e, t.amount});
  }
  const auto profile = build_profile(parts);
  if (exceeds(profile, capacity_)) return false;

  for (const auto& t : tasks_) {
    if (d.channel[t.channel] == Tri::kFalse) continue;
    if (t.amount > capacity_) {
      if (!d.fix_channel(t.channel, false, changed)) return false;
      continue;
    }
    if (d.channel[t.channel] != Tri::kTrue) continue;
    // The file is held at least from the start of the arrival until the
    // departure could earliest finish.
    const Time length = t.in_duration + t.out_duration;
    Own own;
    if (auto [s, e] = held(t); s < e) own = {s, e, t.amount};
    const Time until = d.hi[t.out_slot] + t.out_duration;
    const Time s =
        earliest_fit(profile, d.lo[t.in_slot], length, t.amount, capacity_, own);
    if (!d.raise_start(t.in_slot, s, changed)) return false;
    const Time e = latest_fit(profile, until, length, t.amount, capacity_, own);
    if (!d.lower_start(t.out_slot, e - t.out_duration, changed)) return false;
  }
  return true;
}

LinkOrder::LinkOrder(std::vector<std::size_t> first,
                     std::vector<std::size_t> second)
    : first_(std::move(first)), second_(std::move(second)) {}

bool LinkOrder::propagate(Domains& d, bool& changed) const {
  const std::size_t n = first_.size();
  // The first demand's link index is never below the second's.
  std::size_t lowest = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (d.possible(second_[k])) {
      lowest = k;
      break;
    }
  }
  for (std::size_t k = 0; k < std::min(lowest, n); ++k) {
    if (!d.fix_routed(first_[k], false, changed)) return false;
  }
  std::size_t highest = n;
  for (std::size_t k = n; k-- > 0;) {
    if (d.possible(first_[k])) {
      highest = k;
      break;
    }
  }
  if (highest != n) {
    for (std::size_t k = highest + 1; k < n; ++k) {
      if (!d.fix_routed(second_[k], false, changed)) return false;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!d.chosen(first_[k]) || !d.chosen(second_[k])) continue;
    if (!d.raise_start(second_[k], d.lo[first_[k]], changed)) return false;
    if (!d.lower_start(first_[k], d.hi[second_[k]], changed)) return false;
  }
  return true;
}

MakespanBound::MakespanBound(std::vector<Time> durations)
    : durations_(std::move(durations)) {}

bool MakespanBound::propagate(Domains& d, bool& changed) const {
  for (std::size_t s = 0; s < durations_.size(); ++s) {
    if (!d.lower_start(s, d.bound - durations_[s], changed)) return false;
  }
  return true;
}

}  // namespace gridplan
