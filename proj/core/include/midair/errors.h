// Copyright 2026 The Midair Authors.
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

namespace midair {

enum class ErrorCode {
  kSyntax,             // malformed document
  kSchema,             // structurally invalid scene or message
  kValue,              // non-positive dimension, non-finite number
  kUnknownId,          // primitive id not present in the scene
  kDegenerateAxis,     // zero-length rotation axis
  kNonPositiveScale,   // scale factor <= 0
  kUnknownNode,        // node id not present in the tree
  kLeafNotOperator,    // operator change requested on a leaf
  kResolutionOutOfRange,
  kEmptyInput,
  kZeroTotal,
  kMalformedCsv,
  kScript,             // malformed session script line
};

std::string_view ToString(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace midair
