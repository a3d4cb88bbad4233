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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace deflate {

enum class ErrorCode {
  MalformedDocument,
  NotSimple,
  TooFewVertices,
  DuplicateVertex,
  CollinearTriple,
  NotDeflated,
  SingleTriangle,
  DegenerateQuadrilateral,
  UndirectedEdgeOnPath,
  UndirectedNonTerminalEdge,
  IllegalPath,
  BadDegrees,
  DualMismatch,
  RadiusSearchFailed,
  NonSimpleFrame,
  NotGeneralPosition,
  GridExhausted,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. `detail()` carries the
/// indices that locate the problem: the offending edge pair for NotSimple,
/// the node sequence for IllegalPath, the frame index followed by the edge
/// pair for NonSimpleFrame, and so on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<int> detail = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::vector<int> detail_;
};

}  // namespace deflate
