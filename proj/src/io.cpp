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

#include "io.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace pathhom {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> tokens;
  std::string t;
  while (is >> t) tokens.push_back(std::move(t));
  return tokens;
}

}  // namespace

Digraph read_edge_list(std::istream& in, const std::string& source_name) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::pair<std::string, std::string>, Rational> weights;
  bool saw_weighted = false, saw_unweighted = false;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    auto where = [&] { return source_name + ":" + std::to_string(lineno); };
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      vertices.push_back(tokens[0]);
    } else if (tokens.size() == 2) {
      saw_unweighted = true;
      edges.emplace_back(tokens[0], tokens[1]);
    } else if (tokens.size() == 3) {
      saw_weighted = true;
      try {
        weights.emplace(std::make_pair(tokens[0], tokens[1]), parse_rational(tokens[2]));
      } catch (const Error& e) {
        throw Error(Code::Parse, where() + ": " + e.what());
      }
      edges.emplace_back(tokens[0], tokens[1]);
    } else {
      throw Error(Code::Parse, where() + ": expected 1-3 tokens, got " +
                                   std::to_string(tokens.size()));
    }
    if (saw_weighted && saw_unweighted)
      throw Error(Code::Parse, where() + ": mix of weighted and unweighted edges");
  }
  return Digraph::build(vertices, edges, saw_weighted ? &weights : nullptr);
}

Digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Code::Io, "cannot open '" + path + "'");
  return read_edge_list(in, path);
}

std::string format_edge_list(const Digraph& g) {
  std::ostringstream os;
  for (VertexId v : g.vertices())
    if (g.succ(v).empty() && g.pred(v).empty()) os << g.name(v) << "\n";
  for (const auto& [u, v] : g.edges()) {
    os << g.name(u) << " " << g.name(v);
    if (g.weighted()) os << " " << render_rational(g.weight(u, v));
    os << "\n";
  }
  return os.str();
}

std::vector<std::vector<VertexId>> read_layers(std::istream& in, const Digraph& g,
                                               const std::string& source_name) {
  std::vector<std::vector<VertexId>> layers;
  std::size_t last_nonempty = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) {
      // A comment line is not a layer; a truly blank line is an empty one.
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] == '#') continue;
      layers.push_back({});
      continue;
    }
    std::vector<VertexId> layer;
    for (const auto& name : tokens) {
      auto v = g.table()->find(name);
      if (!v || !g.has_vertex(*v))
        throw Error(Code::NotAPartition, source_name + ":" + std::to_string(lineno) +
                                             ": unknown vertex '" + name + "'");
      layer.push_back(*v);
    }
    layers.push_back(std::move(layer));
    if (!layers.back().empty()) last_nonempty = layers.size();
  }
  layers.resize(last_nonempty);  // drop trailing blank lines
  return layers;
}

std::vector<std::vector<VertexId>> read_layers_file(const std::string& path, const Digraph& g) {
  std::ifstream in(path);
  if (!in) throw Error(Code::Io, "cannot open '" + path + "'");
  return read_layers(in, g, path);
}

std::string format_layers(const StratifiedDigraph& g) {
  std::ostringstream os;
  for (const auto& layer : g.layers()) {
    for (std::size_t i = 0; i < layer.size(); ++i)
      os << (i ? " " : "") << g.graph().name(layer[i]);
    os << "\n";
  }
  return os.str();
}

Json chain_to_json(const Chain& c, const VertexTable& table) {
  Json terms = Json::array();
  for (const auto& [path, coeff] : c.terms()) {
    Json names = Json::array();
    for (VertexId v : path) names.push_back(table.name(v));
    terms.push_back(Json{{"path", names}, {"coeff", render_fraction(coeff)}});
  }
  return Json{{"degree", c.degree()}, {"terms", terms}};
}

std::string curve_to_csv(const PersistenceCurve& curve) {
  std::ostringstream os;
  os << "threshold,betti\n";
  if (curve.baseline)
    os << render_rational(curve.baseline->threshold) << "," << curve.baseline->betti << "\n";
  for (const auto& pt : curve.points)
    os << render_rational(pt.threshold) << "," << pt.betti << "\n";
  return os.str();
}

Json curve_to_json(const PersistenceCurve& curve) {
  Json points = Json::array();
  for (const auto& pt : curve.points)
    points.push_back(Json{{"threshold", render_rational(pt.threshold)}, {"betti", pt.betti}});
  Json out{{"points", points}};
  if (curve.baseline)
    out["baseline"] = Json{{"threshold", render_rational(curve.baseline->threshold)},
                           {"betti", curve.baseline->betti}};
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Code::Io, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Code::Io, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(Code::Io, "write to '" + path + "' failed");
}

}  // namespace pathhom
