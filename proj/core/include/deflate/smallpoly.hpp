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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "deflate/geometry.hpp"
#include "deflate/polygon.hpp"

namespace deflate {

/// A point set in general position together with its orientation signature.
struct OrderType {
  std::vector<Point> points;
  /// Canonical signature: orientations of all index triples (i < j < k) of
  /// the canonically relabelled set, as '+' / '-' characters.
  std::string signature;
};

struct OrderTypeSearch {
  std::vector<OrderType> classes;
  /// Grid sizes [0, g]^2 that were searched, in order.
  std::vector<int> grids;
};

/// Canonical signature under relabelling and reflection. Throws
/// InvalidArgument when three points are collinear.
std::string order_type_signature(const std::vector<Point>& points);

/// One representative per order type of n points (3 <= n <= 6), found by
/// extending smaller sets with every point of the grid [0, g]^2 for
/// g = 16, 32, ... Completeness is declared when two consecutive doublings
/// add no class; GridExhausted is thrown if `max_grid` is passed first.
OrderTypeSearch enumerate_order_types(int n, int max_grid = 128);

/// Simple polygons on the point set: Hamiltonian cycles without crossings,
/// up to start vertex and direction. Each is returned counter-clockwise.
std::vector<Polygon> enumerate_simple_polygons(const std::vector<Point>& points);

enum class SmallClass { Deflated, CompatibleDualExists, NoCompatibleDual };

struct SmallClassification {
  SmallClass kind = SmallClass::Deflated;
  int reflex_count = 0;
  int crossing_count = 0;
};

/// Throws NotGeneralPosition.
SmallClassification classify_small(const Polygon& poly);

std::string to_string(SmallClass kind);

struct HexlabReport {
  int n = 0;
  int order_types = 0;
  struct Entry {
    int order_type;
    Polygon polygon;
    SmallClassification classification;
  };
  std::vector<Entry> polygons;
};

/// Order types, simple polygons and their classification for one n.
HexlabReport run_hexlab(int n);
std::string serialize_hexlab(const HexlabReport& report);

}  // namespace deflate
