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

#include "gridplan/domains.hpp"

namespace gridplan {

bool Domains::fix_routed(std::size_t s, bool value, bool& changed) {
  const Tri want = value ? Tri::kTrue : Tri::kFalse;
  if (routed[s] == want) return true;
  if (routed[s] != Tri::kUnknown) return false;
  routed[s] = want;
  changed = true;
  return !value || lo[s] <= hi[s];
}

bool Domains::raise_start(std::size_t s, Time value, bool& changed) {
  if (routed[s] == Tri::kFalse || value <= lo[s]) return true;
  lo[s] = value;
  changed = true;
  if (lo[s] <= hi[s]) return true;
  if (routed[s] == Tri::kTrue) return false;
  routed[s] = Tri::kFalse;
  return true;
}

bool Domains::lower_start(std::size_t s, Time value, bool& changed) {
  if (routed[s] == Tri::kFalse || value >= hi[s]) return true;
  hi[s] = value;
  changed = true;
  if (lo[s] <= hi[s]) return true;
  if (routed[s] == Tri::kTrue) return false;
  routed[s] = Tri::kFalse;
  return true;
}

bool Domains::fix_channel(std::size_t c, bool value, bool& changed) {
  const Tri want = value ? Tri::kTrue : Tri::kFalse;
  if (channel[c] == want) return true;
  if (channel[c] != Tri::kUnknown) return false;
  channel[c] = want;
  changed = true;
  return true;
}

}  // namespace gridplan
