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

#ifndef GRIDPLAN_PROPAGATORS_HPP
#define GRIDPLAN_PROPAGATORS_HPP

#include <string_view>
#include <vector>

#include "gridplan/domains.hpp"

namespace gridplan {

class Propagator {
 public:
  virtual ~Propagator() = default;
  // Narrows `d` towards consistency. Returns false on conflict; sets
  // `changed` when any domain shrank.
  virtual bool propagate(Domains& d, bool& changed) const = 0;
  virtual std::string_view name() const = 0;
};

// A half-open busy interval that is fixed before search (a committed
// transfer from an earlier plan, or held storage).
struct Reservation {
  Time start = 0;
  Time end = 0;
  std::int64_t amount = 1;
};

// Optional task on a resource: active iff its slot is routed.
struct ResourceTask {
  std::size_t slot = 0;
  Time duration = 0;
  std::int64_t amount = 1;
};

// Cumulative resource with timetable filtering. A link is the unary case
// (capacity 1, every amount 1); a shared router group is the general one.
//
// With `overload_checking`, the energy of routed tasks inside every
// [est, lct] window is also compared to the window's capacity; optional
// tasks whose energy cannot fit are unrouted.
class CumulativeResource final : public Propagator {
 public:
  CumulativeResource(std::vector<ResourceTask> tasks,
                     std::vector<Reservation> fixed, std::int64_t capacity,
                     bool overload_checking = true);

  bool propagate(Domains& d, bool& changed) const override;
  std::string_view name() const override { return "cumulative"; }

 private:
  bool overload_check(Domains& d, bool& changed) const;

  std::vector<ResourceTask> tasks_;
  std::vector<Reservation> fixed_;
  std::int64_t capacity_;
  bool overload_checking_;
};

// sum(coeff[i] * routed[slot[i]]) in [lower, upper], coefficients +-1.
class RoutingSum final : public Propagator {
 public:
  struct Term {
    std::size_t slot;
    int coeff;
  };
  RoutingSum(std::vector<Term> terms, int lower, int upper);

  bool propagate(Domains& d, bool& changed) const override;
  std::string_view name() const override { return "routing-sum"; }

 private:
  std::vector<Term> terms_;
  int lower_;
  int upper_;
};

// Precedence at a transit site of one demand: a departure over any
// outgoing slot starts after the arrival over one of the incoming slots
// has finished. Path constraints guarantee exactly one of each is routed
// when the site is on the path, so bounds use min/max over candidates.
class TransitChaining final : public Propagator {
 public:
  struct Arc {
    std::size_t slot;
    Time duration;
  };
  TransitChaining(std::vector<Arc> incoming, std::vector<Arc> outgoing);

  bool propagate(Domains& d, bool& changed) const override;
  std::string_view name() const override { return "chaining"; }

 private:
  std::vector<Arc> incoming_;
  std::vector<Arc> outgoing_;
};

// channel[c] == routed[in] AND routed[out].
class ChannelAnd final : public Propagator {
 public:
  ChannelAnd(std::size_t channel, std::size_t in_slot, std::size_t out_slot);

  bool propagate(Domains& d, bool& changed) const override;
  std::string_view name() const override { return "channel"; }

 private:
  std::size_t channel_;
  std::size_t in_;
  std::size_t out_;
};

// Storage at one site. Each task holds `amount` from the start of its
// incoming transfer until the end of its outgoing transfer, and is active
// iff its channel variable is 1.
class StorageResource final : public Propagator {
 public:
  struct Task {
    std::size_t channel;
    std::size_t in_slot;
    Time in_duration;
    std::size_t out_slot;
    Time out_duration;
    std::int64_t amount;
  };
  StorageResource(std::vector<Task> tasks, std::vector<Reservation> fixed,
                  std::int64_t capacity);

  bool propagate(Domains& d, bool& changed) const override;
  std::string_view name() const override { return "storage"; }

 private:
  std::vector<Task> tasks_;
  std::vector<Reservation> fixed_;
  std::int64_t capacity_;
};

// Lexicographic ordering of two interchangeable demands. Both lists hold
// the slots of the two demands over the same links, in link declaration
// order. The first demand's link index is at least the second's (the
// search tries later links first); on the same link the first starts no
// later.
class LinkOrder final : public Propagator {
 public:
  LinkOrder(std::vector<std::size_t> first, std::vector<std::size_t> second);

  bool propagate(Domains& d, bool& changed) const override;
  std::string_view name() const override { return "link-order"; }

 private:
  std::vector<std::size_t> first_;
  std::vector<std::size_t> second_;
};

// Objective cut: routed transfers end by Domains::bound.
class MakespanBound final : public Propagator {
 public:
  explicit MakespanBound(std::vector<Time> durations);

  bool propagate(Domains& d, bool& changed) const override;
  std::string_view name() const override { return "makespan"; }

 private:
  std::vector<Time> durations_;
};

}  // namespace gridplan

#endif  // GRIDPLAN_PROPAGATORS_HPP
