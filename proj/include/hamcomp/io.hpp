// Copyright 2026 The hamcomp Authors.
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

// Cycle files (JSON and plain text), vertex word formatting, graph and
// automorphism serialization, explicit graph files.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hamcomp/cayley.hpp"
#include "hamcomp/graphs.hpp"
#include "hamcomp/verify.hpp"
#include "json.hpp"

namespace hamcomp {

using Json = nlohmann::json;

// Bitstrings as "0110"; permutations as "2413" (comma separated when
// n > 9); group elements as "(1,0)"; explicit vertices as their index.
inline std::string word_string(const Graph& g, const VertexWord& w) {
  std::string s;
  if (g.is_bitstring_family()) {
    for (Symbol c : w) s += static_cast<char>('0' + c);
  } else if (g.is_permutation_family()) {
    bool commas = w.size() > 9;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (commas && i) s += ',';
      s += std::to_string(w[i]);
    }
  } else if (g.family() == Family::kAbelianCayley) {
    s = element_string(w);
  } else {
    s = std::to_string(w.empty() ? 0 : w[0]);
  }
  return s;
}

inline VertexWord parse_word(const Graph& g, const std::string& text) {
  auto fail = [&](const std::string& why) { return Error("vertex '" + text + "': " + why); };
  VertexWord w;
  if (g.family() == Family::kAbelianCayley) {
    std::vector<VertexWord> xs = parse_elements(text, g.moduli());
    if (xs.size() != 1) throw fail("expected one group element");
    w = xs[0];
  } else if (g.family() == Family::kExplicit) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw fail("expected a vertex index");
    }
    unsigned long long v = std::stoull(text);
    if (v > std::numeric_limits<Symbol>::max()) throw fail("index out of range");
    w = {static_cast<Symbol>(v)};
  } else if (text.find(',') != std::string::npos) {
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
      if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw fail("expected comma-separated numbers");
      }
      w.push_back(static_cast<Symbol>(std::stoul(part)));
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail(std::string("unexpected '") + c + "'");
      w.push_back(static_cast<Symbol>(c - '0'));
    }
  }
  if (auto why = g.invalid_reason(w)) throw fail(*why);
  return w;
}

// Explicit graph file: first line "n m", then m lines "u v", 0-based.
inline Graph read_explicit_graph(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 1 || m < 0) throw Error("explicit graph: expected header 'n m'");
  std::vector<std::pair<int, int>> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v)) throw Error("explicit graph: edge " + std::to_string(i + 1) + " missing");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error("explicit graph: edge " + std::to_string(i + 1) + " out of range");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::explicit_graph(static_cast<int>(n), edges);
}

inline Graph read_explicit_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_explicit_graph(in);
}

inline Json graph_params(const Graph& g) {
  switch (g.family()) {
    case Family::kJohnson: return {{"n", g.n()}, {"k", g.k()}};
    case Family::kMiddleLevels: return {{"n", g.k()}};
    case Family::kAbelianCayley: {
      Json gens = Json::array();
      for (const VertexWord& s : g.generators()) gens.push_back(std::vector<int>(s.begin(), s.end()));
      return {{"group", group_string(g.moduli())}, {"generators", gens}};
    }
    case Family::kExplicit: {
      Json edges = Json::array();
      for (std::size_t u = 0; u < g.adjacency().size(); ++u) {
        for (int v : g.adjacency()[u]) {
          if (static_cast<int>(u) < v) edges.push_back({u, v});
        }
      }
      return {{"n", g.n()}, {"edges", edges}};
    }
    default: return {{"n", g.n()}};
  }
}

inline Graph graph_from_json(const std::string& family, const Json& p) {
  auto num = [&](const char* key) {
    if (!p.contains(key) || !p[key].is_number_integer()) {
      throw Error(family + ": params need integer '" + key + "'");
    }
    return p[key].get<int>();
  };
  if (family == "hypercube") return Graph::hypercube(num("n"));
  if (family == "johnson") return Graph::johnson(num("n"), num("k"));
  if (family == "middle") return Graph::middle_levels(num("n"));
  if (family == "permutahedron") return Graph::permutahedron(num("n"));
  if (family == "permutahedron_plus") return Graph::permutahedron_plus(num("n"));
  if (family == "cayley") {
    if (!p.contains("group") || !p["group"].is_string()) throw Error("cayley: params need 'group'");
    std::vector<int> moduli = parse_group(p["group"].get<std::string>());
    std::vector<VertexWord> gens;
    for (const Json& s : p.value("generators", Json::array())) {
      std::vector<int> v = s.get<std::vector<int>>();
      if (v.size() != moduli.size()) throw Error("cayley: generator length mismatch");
      VertexWord w;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= moduli[i]) throw Error("cayley: generator entry out of range");
        w.push_back(static_cast<Symbol>(v[i]));
      }
      gens.push_back(w);
    }
    return Graph::abelian_cayley(moduli, gens);
  }
  if (family == "explicit") {
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : p.value("edges", Json::array())) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::explicit_graph(num("n"), edges);
  }
  throw Error("unknown family '" + family + "'");
}

inline Json automorphism_to_json(const Automorphism& f) {
  switch (f.kind()) {
    case Automorphism::Kind::kBits:
      return {{"kind", "bits"}, {"source", f.source()}, {"flips", std::vector<int>(f.flips().begin(), f.flips().end())}};
    case Automorphism::Kind::kPositions:
      return {{"kind", "positions"},
              {"source", f.source()},
              {"values", std::vector<int>(f.values().begin() + 1, f.values().end())}};
    case Automorphism::Kind::kAffine:
      return {{"kind", "affine"},
              {"moduli", f.moduli()},
              {"signs", f.signs()},
              {"offset", std::vector<int>(f.offset().begin(), f.offset().end())}};
    case Automorphism::Kind::kTable: return {{"kind", "table"}, {"image", f.image()}};
  }
  return {};
}

inline Automorphism automorphism_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "bits") {
    std::vector<int> flips = j.at("flips").get<std::vector<int>>();
    return Automorphism::bits(j.at("source").get<std::vector<int>>(), std::vector<Symbol>(flips.begin(), flips.end()));
  }
  if (kind == "positions") {
    std::vector<int> values{0};
    for (int v : j.at("values").get<std::vector<int>>()) values.push_back(v);
    return Automorphism::positions(j.at("source").get<std::vector<int>>(), values);
  }
  if (kind == "affine") {
    std::vector<int> offset = j.at("offset").get<std::vector<int>>();
    for (int v : offset) {
      if (v < 0) throw Error("automorphism: negative offset");
    }
    return Automorphism::affine(j.at("moduli").get<std::vector<int>>(), j.at("signs").get<std::vector<int>>(),
                                VertexWord(offset.begin(), offset.end()));
  }
  if (kind == "table") return Automorphism::table(j.at("image").get<std::vector<Index>>());
  throw Error("automorphism: unknown kind '" + kind + "'");
}

// Integers above 2^53 are written as strings.
inline Json big_number(std::uint64_t v) {
  if (v > (std::uint64_t{1} << 53)) return std::to_string(v);
  return v;
}

inline std::uint64_t read_number(const Json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    long long v = j.get<long long>();
    if (v < 0) throw Error("expected a nonnegative number");
    return static_cast<std::uint64_t>(v);
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error("expected a number, got '" + s + "'");
    }
    return std::stoull(s);
  }
  throw Error("expected a number");
}

inline Json cycle_to_json(const HamCycle& c) {
  Json j;
  j["family"] = family_name(c.graph.family());
  j["params"] = graph_params(c.graph);
  if (!c.construction.empty()) j["construction"] = c.construction;
  Json vs = Json::array();
  for (const VertexWord& w : c.vertices) vs.push_back(word_string(c.graph, w));
  j["vertices"] = std::move(vs);
  j["automorphism"] = c.automorphism ? automorphism_to_json(*c.automorphism) : Json(nullptr);
  j["claimed_k"] = c.claimed_k ? big_number(*c.claimed_k) : Json(nullptr);
  return j;
}

inline HamCycle cycle_from_json(const Json& j) {
  if (!j.is_object()) throw Error("cycle file: expected a JSON object");
  if (!j.contains("family") || !j["family"].is_string()) throw Error("cycle file: missing 'family'");
  Graph g = graph_from_json(j["family"].get<std::string>(), j.value("params", Json::object()));
  HamCycle c{g, {}, j.value("construction", std::string()), std::nullopt, std::nullopt};
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw Error("cycle file: missing 'vertices'");
  for (const Json& v : j["vertices"]) {
    if (!v.is_string()) throw Error("cycle file: vertices must be strings");
    c.vertices.push_back(parse_word(g, v.get<std::string>()));
  }
  if (j.contains("automorphism") && !j["automorphism"].is_null()) {
    c.automorphism = automorphism_from_json(j["automorphism"]);
    require_fit(g, *c.automorphism);
  }
  if (j.contains("claimed_k") && !j["claimed_k"].is_null()) c.claimed_k = read_number(j["claimed_k"]);
  return c;
}

// "# key: value" header lines, then one vertex word per line.
inline std::string cycle_to_text(const HamCycle& c) {
  std::string s = "# family: " + family_name(c.graph.family()) + "\n";
  s += "# params: " + graph_params(c.graph).dump() + "\n";
  if (!c.construction.empty()) s += "# construction: " + c.construction + "\n";
  if (c.automorphism) s += "# automorphism: " + automorphism_to_json(*c.automorphism).dump() + "\n";
  if (c.claimed_k) s += "# claimed_k: " + std::to_string(*c.claimed_k) + "\n";
  for (const VertexWord& w : c.vertices) s += word_string(c.graph, w) + "\n";
  return s;
}

inline HamCycle cycle_from_text(std::istream& in) {
  Json j = Json::object();
  j["vertices"] = Json::array();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) continue;
      std::string key = line.substr(1, colon - 1);
      std::string value = line.substr(colon + 1);
      auto trim = [](std::string& s) {
        s.erase(0, s.find_first_not_of(' '));
        s.erase(s.find_last_not_of(' ') + 1);
      };
      trim(key);
      trim(value);
      try {
        if (key == "family" || key == "construction") j[key] = value;
        else if (key == "params" || key == "automorphism") j[key] = Json::parse(value);
        else if (key == "claimed_k") j[key] = value;
      } catch (const Json::exception& e) {
        throw Error("line " + std::to_string(lineno) + ": " + e.what());
      }
      continue;
    }
    j["vertices"].push_back(line);
  }
  if (!j.contains("family")) throw Error("text cycle file: missing '# family:' header");
  return cycle_from_json(j);
}

inline HamCycle read_cycle(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return cycle_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw Error(std::string("cycle file: ") + e.what());
    }
  }
  std::istringstream lines(text);
  return cycle_from_text(lines);
}

inline HamCycle read_cycle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_cycle(in);
}

inline void write_cycle_file(const HamCycle& c, const std::string& path, bool text = false) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << (text ? cycle_to_text(c) : cycle_to_json(c).dump(1) + "\n");
}

}  // namespace hamcomp
