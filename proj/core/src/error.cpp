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

#include "deflate/error.hpp"

namespace deflate {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::CollinearTriple: return "CollinearTriple";
    case ErrorCode::NotDeflated: return "NotDeflated";
    case ErrorCode::SingleTriangle: return "SingleTriangle";
    case ErrorCode::DegenerateQuadrilateral: return "DegenerateQuadrilateral";
    case ErrorCode::UndirectedEdgeOnPath: return "UndirectedEdgeOnPath";
    case ErrorCode::UndirectedNonTerminalEdge: return "UndirectedNonTerminalEdge";
    case ErrorCode::IllegalPath: return "IllegalPath";
    case ErrorCode::BadDegrees: return "BadDegrees";
    case ErrorCode::DualMismatch: return "DualMismatch";
    case ErrorCode::RadiusSearchFailed: return "RadiusSearchFailed";
    case ErrorCode::NonSimpleFrame: return "NonSimpleFrame";
    case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::GridExhausted: return "GridExhausted";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<int> detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace deflate
