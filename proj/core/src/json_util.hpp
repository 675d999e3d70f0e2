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

#ifndef GRIDPLAN_SRC_JSON_UTIL_HPP
#define GRIDPLAN_SRC_JSON_UTIL_HPP

#include <initializer_list>
#include <string>
#include <string_view>

#include "gridplan/network.hpp"
#include "json.hpp"

namespace gridplan::detail {

using nlohmann::json;

// Strict accessors: every failure becomes an InputError that names the
// JSON path (e.g. "network.links[2].slowdown").

void require_object(const json& j, const std::string& where);
void reject_unknown_keys(const json& j, const std::string& where,
                         std::initializer_list<std::string_view> allowed);
const json& require_key(const json& j, const std::string& where,
                        const char* key);
std::string get_string(const json& j, const std::string& where);
std::int64_t get_int(const json& j, const std::string& where);
double get_number(const json& j, const std::string& where);

json parse_text(std::string_view text, std::string_view source);

Network network_from_json(const json& j, const std::string& where);
json network_json(const Network& network);

}  // namespace gridplan::detail

#endif  // GRIDPLAN_SRC_JSON_UTIL_HPP
