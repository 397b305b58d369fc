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

#include "sample.hpp"

#include <algorithm>
#include <utility>

#include "error.hpp"

namespace pathhom {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  // Reject the low residue block so the modulus is unbiased.
  std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % n;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t purpose) {
  SplitMix64 g(seed ^ (index * 0xc2b2ae3d27d4eb4fULL) ^ (purpose * 0x165667b19e3779f9ULL));
  return g.next();
}

StratifiedDigraph complete_layered(const std::vector<int>& sizes) {
  if (sizes.empty()) throw Error(Code::Argument, "need at least one layer size");
  for (int s : sizes)
    if (s < 1 || s > 99) throw Error(Code::Argument, "layer sizes must be in 1..99");
  if (sizes.size() > 99) throw Error(Code::Argument, "too many layers");

  auto name_of = [](std::size_t layer, int j) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "v%02zu_%02d", layer, j);
    return std::string(buf);
  };

  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (int j = 0; j < sizes[i]; ++j) names.push_back(name_of(i, j));
    if (i + 1 < sizes.size())
      for (int j = 0; j < sizes[i]; ++j)
        for (int k = 0; k < sizes[i + 1]; ++k) edges.emplace_back(name_of(i, j), name_of(i + 1, k));
  }
  Digraph g = Digraph::build(names, edges);

  std::vector<std::vector<VertexId>> layers(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (int j = 0; j < sizes[i]; ++j) layers[i].push_back(*g.table()->find(name_of(i, j)));
  return StratifiedDigraph::validate(std::move(g), std::move(layers));
}

StratifiedDigraph sample_layered(const SampleSpec& spec) {
  if (spec.rho <= 0 || spec.rho > 1)
    throw Error(Code::BadRho, "edge fraction must lie in (0, 1], got " + render_fraction(spec.rho));
  StratifiedDigraph base = complete_layered(spec.sizes);

  SplitMix64 pick(derive_seed(spec.seed, spec.index, 0));
  std::vector<EdgeKey> chosen;
  for (std::size_t i = 0; i + 1 < base.layers().size(); ++i) {
    const auto& upper = base.layers()[i];
    const auto& lower = base.layers()[i + 1];
    std::vector<EdgeKey> pool;
    pool.reserve(upper.size() * lower.size());
    for (VertexId u : upper)
      for (VertexId v : lower) pool.emplace_back(u, v);

    // ceil(rho * |pool|), computed exactly.
    mpz_class num = spec.rho.get_num() * static_cast<unsigned long>(pool.size());
    mpz_class want_z;
    mpz_cdiv_q(want_z.get_mpz_t(), num.get_mpz_t(), spec.rho.get_den().get_mpz_t());
    std::size_t want = static_cast<std::size_t>(want_z.get_ui());

    for (std::size_t t = 0; t < want; ++t) {
      std::size_t r = t + static_cast<std::size_t>(pick.below(pool.size() - t));
      std::swap(pool[t], pool[r]);
    }
    pool.resize(want);
    chosen.insert(chosen.end(), pool.begin(), pool.end());
  }
  std::sort(chosen.begin(), chosen.end());

  std::map<EdgeKey, Rational> weights;
  if (spec.uniform_weights) {
    SplitMix64 wstream(derive_seed(spec.seed, spec.index, 1));
    for (const auto& e : chosen) {
      Rational w(static_cast<unsigned long>(1 + wstream.below(999999)), 1000000UL);
      w.canonicalize();
      weights.emplace(e, std::move(w));
    }
  }

  Digraph g(base.graph().table(), base.graph().vertices(), std::move(chosen), std::move(weights));
  return StratifiedDigraph::unchecked(std::move(g), base.layers());
}

}  // namespace pathhom
