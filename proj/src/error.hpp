// Copyright 2026 the pathhom authors
//
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

#pragma once

#include <stdexcept>
#include <string>

namespace pathhom {

enum class Code {
  Parse,
  SelfLoop,
  DuplicateEdge,
  NotAPartition,
  EdgeSkipsLayer,
  CycleDetected,
  NotStratifiable,
  DepthZero,
  MissingWeights,
  Inconsistent,
  UnknownLabel,
  DimensionGuard,
  BadRho,
  Mismatch,
  Io,
  Argument,
};

class Error : public std::runtime_error {
public:
  Error(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Code code() const { return code_; }

private:
  Code code_;
};

}  // namespace pathhom
