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

#ifndef GRIDPLAN_IO_HPP
#define GRIDPLAN_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "gridplan/network.hpp"

namespace gridplan {

// Network files:
//   {"sites": [{"id": "A", "storage": 4 | "unbounded"}, ...],
//    "links": [{"id": "l1", "from": "A", "to": "B", "slowdown": 2}, ...],
//    "shared_groups": [{"members": ["l1", "l2"], "capacity": 1}, ...]}
// Request files:
//   {"destination": "B",
//    "demands": [{"name": "f1", "size": 1, "origins": ["A"]}, ...]}
//
// Unknown keys are rejected. Parsed objects are validated; every failure
// is an InputError naming the file and field.
Network parse_network(std::string_view text, std::string_view source = "network");
Request parse_request(std::string_view text, std::string_view source = "request");

Network load_network(const std::filesystem::path& path);
Request load_request(const std::filesystem::path& path);

std::string network_to_json(const Network& network);
std::string request_to_json(const Request& request);

// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace gridplan

#endif  // GRIDPLAN_IO_HPP
