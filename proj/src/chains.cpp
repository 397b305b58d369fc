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

#include "chains.hpp"

#include <algorithm>

#include "error.hpp"

namespace pathhom {

namespace {

bool no_repeated_step(const Path& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i - 1] == p[i]) return false;
  return true;
}

}  // namespace

void Chain::add(const Path& path, const Rational& coeff) {
  if (static_cast<int>(path.size()) != degree_ + 1)
    throw Error(Code::Argument, "path length does not match chain degree");
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(path, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& o) {
  if (degree_ != o.degree_) throw Error(Code::Argument, "chain degree mismatch in sum");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

Chain& Chain::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

Chain Chain::operator-() const {
  Chain out(degree_);
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
  return out;
}

Chain operator+(Chain a, const Chain& b) {
  a += b;
  return a;
}

Chain operator*(const Rational& c, Chain a) {
  a *= c;
  return a;
}

Chain unit_chain(const Rational& coeff) {
  Chain c(-1);
  c.add({}, coeff);
  return c;
}

Chain path_chain(const Path& p, const Rational& coeff) {
  Chain c(static_cast<int>(p.size()) - 1);
  c.add(p, coeff);
  return c;
}

Chain boundary(const Chain& c) {
  Chain out(c.degree() - 1);
  if (c.degree() < 0) return out;
  if (c.degree() == 0) {
    Rational total;
    for (const auto& [p, v] : c.terms()) total += v;
    out.add({}, total);
    return out;
  }
  for (const auto& [p, v] : c.terms()) {
    Rational sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      Path face;
      face.reserve(p.size() - 1);
      face.insert(face.end(), p.begin(), p.begin() + i);
      face.insert(face.end(), p.begin() + i + 1, p.end());
      // Deleting an interior vertex can merge two equal neighbours; that face
      // leaves the path complex and is dropped.
      if (no_repeated_step(face)) out.add(face, sign * v);
      sign = -sign;
    }
  }
  return out;
}

Chain join(const Chain& a, const Chain& b) {
  Chain out(a.degree() + b.degree() + 1);
  for (const auto& [pa, va] : a.terms())
    for (const auto& [pb, vb] : b.terms()) {
      if (!pa.empty() && !pb.empty() && pa.back() == pb.front()) continue;
      Path joined;
      joined.reserve(pa.size() + pb.size());
      joined.insert(joined.end(), pa.begin(), pa.end());
      joined.insert(joined.end(), pb.begin(), pb.end());
      out.add(joined, va * vb);
    }
  return out;
}

Chain join_vertex(const Chain& a, VertexId v) {
  Chain out(a.degree() + 1);
  for (const auto& [pa, va] : a.terms()) {
    if (!pa.empty() && pa.back() == v) continue;
    Path joined = pa;
    joined.push_back(v);
    out.add(joined, va);
  }
  return out;
}

bool path_allowed(const Digraph& g, const Path& p) {
  if (p.empty()) return false;
  if (!g.has_vertex(p[0])) return false;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (!g.has_edge(p[i - 1], p[i])) return false;
  return true;
}

std::vector<std::vector<Path>> allowed_paths_up_to(const Digraph& g, int pmax, long long guard) {
  std::vector<std::vector<Path>> levels;
  if (pmax < 0) return levels;
  std::vector<Path> cur;
  cur.reserve(g.vertex_count());
  for (VertexId v : g.vertices()) cur.push_back({v});
  levels.push_back(cur);
  for (int p = 1; p <= pmax; ++p) {
    if (guard >= 0) {
      long long predicted = 0;
      for (const auto& path : levels.back()) {
        predicted += static_cast<long long>(g.succ(path.back()).size());
        if (predicted > guard)
          throw Error(Code::DimensionGuard,
                      "allowed path count at degree " + std::to_string(p) + " exceeds limit " +
                          std::to_string(guard));
      }
    }
    std::vector<Path> next;
    for (const auto& path : levels.back())
      for (VertexId w : g.succ(path.back())) {
        Path ext = path;
        ext.push_back(w);
        next.push_back(std::move(ext));
      }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  return levels;
}

std::vector<Path> enumerate_allowed_paths(const Digraph& g, int p) {
  if (p < 0) return {};
  auto levels = allowed_paths_up_to(g, p);
  if (static_cast<std::size_t>(p) >= levels.size()) return {};
  return levels[static_cast<std::size_t>(p)];
}

Chain allowed_part(const Chain& c, const Digraph& g) {
  Chain out(c.degree());
  for (const auto& [p, v] : c.terms())
    if (path_allowed(g, p)) out.add(p, v);
  return out;
}

Chain disallowed_part(const Chain& c, const Digraph& g) {
  Chain out(c.degree());
  for (const auto& [p, v] : c.terms())
    if (!path_allowed(g, p)) out.add(p, v);
  return out;
}

std::set<VertexId> cross_section(const Chain& c, int s) {
  std::set<VertexId> out;
  if (s < 0 || s > c.degree()) return out;
  for (const auto& [p, v] : c.terms()) out.insert(p[static_cast<std::size_t>(s)]);
  return out;
}

Digraph support(const Chain& c, const TableRef& table) {
  std::set<VertexId> verts;
  std::set<EdgeKey> edges;
  for (const auto& [p, v] : c.terms())
    for (std::size_t i = 0; i < p.size(); ++i) {
      verts.insert(p[i]);
      if (i > 0) edges.emplace(p[i - 1], p[i]);
    }
  return Digraph(table, {verts.begin(), verts.end()}, {edges.begin(), edges.end()});
}

bool is_cycle(const Chain& c, const Digraph& g) {
  for (const auto& [p, v] : c.terms())
    if (!path_allowed(g, p)) return false;
  return boundary(c).is_zero();
}

}  // namespace pathhom
