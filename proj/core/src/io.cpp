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

#include "gridplan/io.hpp"

#include <fstream>
#include <sstream>

#include "gridplan/validate.hpp"
#include "json_util.hpp"

namespace gridplan {
namespace detail {

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
}

void reject_unknown_keys(const json& j, const std::string& where,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw InputError(where + ": unknown key '" + key + "'");
  }
}

const json& require_key(const json& j, const std::string& where,
                        const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw InputError(where + ": missing key '" + std::string(key) + "'");
  }
  return *it;
}

std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

std::int64_t get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

double get_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  return j.get<double>();
}

json parse_text(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

namespace {

const json& require_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  return j;
}

}  // namespace

Network network_from_json(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown_keys(j, where, {"sites", "links", "shared_groups"});

  std::vector<Site> sites;
  const std::string sites_at = where + ".sites";
  const auto& jsites = require_array(require_key(j, where, "sites"), sites_at);
  for (std::size_t i = 0; i < jsites.size(); ++i) {
    const std::string at = sites_at + "[" + std::to_string(i) + "]";
    const auto& js = jsites[i];
    require_object(js, at);
    reject_unknown_keys(js, at, {"id", "storage"});
    Site site{get_string(require_key(js, at, "id"), at + ".id"), std::nullopt};
    if (auto it = js.find("storage"); it != js.end()) {
      if (it->is_string()) {
        if (it->get<std::string>() != "unbounded") {
          throw InputError(at + ".storage: expected an integer or \"unbounded\"");
        }
      } else {
        site.storage = get_int(*it, at + ".storage");
      }
    }
    sites.push_back(std::move(site));
  }

  std::vector<Link> links;
  const std::string links_at = where + ".links";
  const auto& jlinks = require_array(require_key(j, where, "links"), links_at);
  for (std::size_t i = 0; i < jlinks.size(); ++i) {
    const std::string at = links_at + "[" + std::to_string(i) + "]";
    const auto& jl = jlinks[i];
    require_object(jl, at);
    reject_unknown_keys(jl, at, {"id", "from", "to", "slowdown"});
    links.push_back({get_string(require_key(jl, at, "id"), at + ".id"),
                     get_string(require_key(jl, at, "from"), at + ".from"),
                     get_string(require_key(jl, at, "to"), at + ".to"),
                     get_int(require_key(jl, at, "slowdown"), at + ".slowdown")});
  }

  std::vector<SharedLinkGroup> groups;
  if (auto it = j.find("shared_groups"); it != j.end()) {
    const std::string groups_at = where + ".shared_groups";
    require_array(*it, groups_at);
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = groups_at + "[" + std::to_string(i) + "]";
      const auto& jg = (*it)[i];
      require_object(jg, at);
      reject_unknown_keys(jg, at, {"members", "capacity"});
      SharedLinkGroup group;
      const auto& jm =
          require_array(require_key(jg, at, "members"), at + ".members");
      for (std::size_t m = 0; m < jm.size(); ++m) {
        group.members.push_back(
            get_string(jm[m], at + ".members[" + std::to_string(m) + "]"));
      }
      group.capacity = get_int(require_key(jg, at, "capacity"), at + ".capacity");
      groups.push_back(std::move(group));
    }
  }
  return Network(std::move(sites), std::move(links), std::move(groups));
}

json network_json(const Network& network) {
  json j;
  j["sites"] = json::array();
  for (const auto& s : network.sites()) {
    json js{{"id", s.id}};
    if (s.storage) {
      js["storage"] = *s.storage;
    } else {
      js["storage"] = "unbounded";
    }
    j["sites"].push_back(js);
  }
  j["links"] = json::array();
  for (const auto& l : network.links()) {
    j["links"].push_back(
        {{"id", l.id}, {"from", l.from}, {"to", l.to}, {"slowdown", l.slowdown}});
  }
  j["shared_groups"] = json::array();
  for (const auto& g : network.shared_groups()) {
    j["shared_groups"].push_back({{"members", g.members}, {"capacity", g.capacity}});
  }
  return j;
}

}  // namespace detail

namespace {

[[noreturn]] void throw_violations(std::string_view source,
                                   const ValidationResult& result) {
  std::string message = std::string(source) + ": invalid";
  for (const auto& v : result.violations()) message += "\n  " + v;
  throw InputError(message);
}

Request request_from_json(const detail::json& j, const std::string& where) {
  using namespace detail;
  require_object(j, where);
  reject_unknown_keys(j, where, {"destination", "demands"});
  Request request;
  request.destination =
      get_string(require_key(j, where, "destination"), where + ".destination");
  const std::string demands_at = where + ".demands";
  const auto& jd = require_key(j, where, "demands");
  if (!jd.is_array()) throw InputError(demands_at + ": expected an array");
  for (std::size_t i = 0; i < jd.size(); ++i) {
    const std::string at = demands_at + "[" + std::to_string(i) + "]";
    const auto& jdem = jd[i];
    require_object(jdem, at);
    reject_unknown_keys(jdem, at, {"name", "size", "origins"});
    Demand demand;
    demand.name = get_string(require_key(jdem, at, "name"), at + ".name");
    demand.size = get_int(require_key(jdem, at, "size"), at + ".size");
    const auto& jo = require_key(jdem, at, "origins");
    if (!jo.is_array()) throw InputError(at + ".origins: expected an array");
    for (std::size_t o = 0; o < jo.size(); ++o) {
      demand.origins.push_back(
          get_string(jo[o], at + ".origins[" + std::to_string(o) + "]"));
    }
    request.demands.push_back(std::move(demand));
  }
  return request;
}

}  // namespace

Network parse_network(std::string_view text, std::string_view source) {
  auto j = detail::parse_text(text, source);
  Network network = detail::network_from_json(j, std::string(source));
  auto result = validate_network(network);
  if (!result.ok()) throw_violations(source, result);
  return network;
}

Request parse_request(std::string_view text, std::string_view source) {
  auto j = detail::parse_text(text, source);
  Request request = request_from_json(j, std::string(source));
  auto result = validate_request(request);
  if (!result.ok()) throw_violations(source, result);
  return request;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Network load_network(const std::filesystem::path& path) {
  return parse_network(read_file(path), path.string());
}

Request load_request(const std::filesystem::path& path) {
  return parse_request(read_file(path), path.string());
}

std::string network_to_json(const Network& network) {
  return detail::network_json(network).dump(2);
}

std::string request_to_json(const Request& request) {
  detail::json j;
  j["destination"] = request.destination;
  j["demands"] = detail::json::array();
  for (const auto& d : request.demands) {
    j["demands"].push_back(
        {{"name", d.name}, {"size", d.size}, {"origins", d.origins}});
  }
  return j.dump(2);
}

}  // namespace gridplan
