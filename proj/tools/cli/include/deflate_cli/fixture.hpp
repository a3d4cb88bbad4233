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

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace deflate::cli {

struct FixtureCheck {
  std::string property;
  bool ok = false;
  std::string expected;
  std::string actual;
};

struct FixtureReport {
  std::string name;
  std::vector<FixtureCheck> checks;

  bool ok() const;
};

/// Re-derives every property listed under "expect" in a polygon or dual
/// document. File references inside the block resolve against `dir`.
/// Unknown property names are reported as failed checks.
FixtureReport verify_fixture(const nlohmann::json& doc, const std::filesystem::path& dir);

/// Reads and verifies a fixture file. Throws deflate::Error on malformed
/// documents and std::runtime_error when the file cannot be read.
FixtureReport verify_fixture_file(const std::filesystem::path& path);

/// Visible vertex pairs of a and b agree under some rotation or reflection
/// of the boundary order.
bool same_vertex_visibility(const std::vector<std::pair<int, int>>& a,
                            const std::vector<std::pair<int, int>>& b, int n);

}  // namespace deflate::cli
