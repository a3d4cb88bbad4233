// Copyright 2026 The deflate-kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON helpers shared by the document formats. Internal to the core library.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "deflate/error.hpp"
#include "deflate/geometry.hpp"

namespace deflate::json_util {

using nlohmann::json;

inline json parse(std::string_view document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::MalformedDocument, std::string("missing key '") + key + "'");
  }
  return obj.at(key);
}

inline Scalar scalar_from(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw Error(ErrorCode::MalformedDocument, "coordinate must be a rational string");
}

inline json point_to(const Point& p) { return json::array({p.x.str(), p.y.str()}); }

inline Point point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::MalformedDocument, "point must be a two-element array");
  }
  return {scalar_from(j[0]), scalar_from(j[1])};
}

inline json ring_to(const std::vector<Point>& ring) {
  json arr = json::array();
  for (const auto& p : ring) arr.push_back(point_to(p));
  return arr;
}

inline std::vector<Point> ring_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::MalformedDocument, "vertices must be an array");
  std::vector<Point> ring;
  ring.reserve(j.size());
  for (const auto& p : j) ring.push_back(point_from(p));
  return ring;
}

inline int int_from(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw Error(ErrorCode::MalformedDocument, std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

}  // namespace deflate::json_util
