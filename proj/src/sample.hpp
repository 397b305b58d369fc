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

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace pathhom {

// Counter-based generator (splitmix64): output k is a fixed mix of
// seed + k * gamma, so streams can be split by reseeding.  Used everywhere a
// byte-reproducible random choice is needed.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform value in [0, n) by rejection; n must be positive.
  std::uint64_t below(std::uint64_t n);

private:
  std::uint64_t state_;
};

// Derives an independent stream for a sub-task of a seeded run.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t purpose = 0);

// Complete layered graph on the given layer sizes; vertex j of layer i is
// named "v<i>_<j>" with zero-padded numbers so that name order matches
// construction order.
StratifiedDigraph complete_layered(const std::vector<int>& sizes);

struct SampleSpec {
  std::vector<int> sizes;
  Rational rho;          // edge fraction per layer pair, in (0, 1]
  std::uint64_t seed = 0;
  std::uint64_t index = 0;  // which sample of the run
  bool uniform_weights = false;  // assign weights drawn from (0, 1)
};

// Keeps ceil(rho * |K_i| * |K_{i+1}|) edges of every adjacent layer pair of
// the complete layered graph, chosen without replacement from the stream for
// (seed, index).  Identical spec gives an identical graph.
// Throws Error{BadRho} when rho is outside (0, 1].
StratifiedDigraph sample_layered(const SampleSpec& spec);

}  // namespace pathhom
