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

#include <map>
#include <set>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace pathhom {

// Elementary path of degree p: a (p+1)-tuple of vertices with no two equal
// neighbours.  Vertices may otherwise repeat.  The empty tuple is the scalar
// unit of degree -1.
using Path = std::vector<VertexId>;

// Formal rational combination of elementary paths of one degree, stored
// sparsely with terms in lexicographic order.  The zero chain of any degree
// has no terms.
class Chain {
public:
  explicit Chain(int degree = -1) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<Path, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds coeff * path, erasing the term if the sum cancels.  The path length
  // must match the chain degree.
  void add(const Path& path, const Rational& coeff);

  Chain& operator+=(const Chain& o);
  Chain& operator*=(const Rational& c);
  Chain operator-() const;
  bool operator==(const Chain& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }
  bool operator!=(const Chain& o) const { return !(*this == o); }

private:
  int degree_;
  std::map<Path, Rational> terms_;
};

Chain operator+(Chain a, const Chain& b);
Chain operator*(const Rational& c, Chain a);

// Scalar chain (degree -1) with the given coefficient on the unit.
Chain unit_chain(const Rational& coeff = 1);
// Single-term chain for one elementary path.
Chain path_chain(const Path& p, const Rational& coeff = 1);

// Face-alternating boundary; degree -1 and below map to zero.  A vertex maps
// to its coefficient times the unit.
Chain boundary(const Chain& c);

// Concatenation join, degree p + q + 1; joining with a scalar is scalar
// multiplication.  Terms whose concatenation repeats a vertex at the seam
// vanish.
Chain join(const Chain& a, const Chain& b);
Chain join_vertex(const Chain& a, VertexId v);  // right join with one vertex

bool path_allowed(const Digraph& g, const Path& p);

// All allowed paths of degree 0..pmax in lexicographic order per degree,
// built by extending along out-edges.  A negative guard disables the size
// check; otherwise Error{DimensionGuard} when a level would exceed it.
std::vector<std::vector<Path>> allowed_paths_up_to(const Digraph& g, int pmax,
                                                   long long guard = -1);
std::vector<Path> enumerate_allowed_paths(const Digraph& g, int p);

// Projection onto the allowed / disallowed summand with respect to g.
Chain allowed_part(const Chain& c, const Digraph& g);
Chain disallowed_part(const Chain& c, const Digraph& g);

// Vertices appearing at position s across the terms; empty when s is outside
// [0, degree].
std::set<VertexId> cross_section(const Chain& c, int s);

// Digraph spanned by the terms: their vertices plus every consecutive step.
Digraph support(const Chain& c, const TableRef& table);

// True iff every term is allowed in g and the boundary vanishes.
bool is_cycle(const Chain& c, const Digraph& g);

}  // namespace pathhom
