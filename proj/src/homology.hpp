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

#include <optional>
#include <string>
#include <vector>

#include "chains.hpp"

namespace pathhom {

struct HomologyResult {
  long long betti = 0;
  int dimension = 0;
  std::string algorithm;               // which engine produced the number
  std::optional<std::vector<Chain>> basis;  // representative cycles when tracked
};

}  // namespace pathhom
