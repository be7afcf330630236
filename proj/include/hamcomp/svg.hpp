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

// Circular SVG drawings of Hamilton cycles: vertices equidistant on a circle
// in cycle order, edges as straight chords, words as concentric rings.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "hamcomp/verify.hpp"

namespace hamcomp {

enum class DrawMode {
  kCycle,  // the cycle as a polygon
  kRings,  // one concentric ring per word coordinate
  kGraph,  // every edge of the graph as a chord
};

struct DrawOptions {
  DrawMode mode = DrawMode::kCycle;
  double size = 800.0;
};

struct Point {
  double x = 0;
  double y = 0;
};

// Vertex i at angle i * 360 / N, clockwise from the top.
inline Point circle_point(std::size_t i, std::size_t n, double radius, double center) {
  const double pi = std::acos(-1.0);
  double a = 2.0 * pi * static_cast<double>(i) / static_cast<double>(n);
  return {center + radius * std::sin(a), center - radius * std::cos(a)};
}

inline std::vector<Point> circle_layout(std::size_t n, double radius, double center) {
  std::vector<Point> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = circle_point(i, n, radius, center);
  return out;
}

namespace internal {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

// 0 white, 1 black for bits; 1 red, 2 orange, ... for permutation values.
inline const char* symbol_color(const Graph& g, Symbol s) {
  static const char* kBits[] = {"#ffffff", "#000000"};
  static const char* kValues[] = {"#e41a1c", "#ff7f00", "#ffd92f", "#4daf4a", "#377eb8", "#984ea3",
                                  "#a65628", "#f781bf", "#999999", "#66c2a5", "#8da0cb", "#1b9e77"};
  if (g.is_bitstring_family()) return kBits[s & 1];
  std::size_t i = g.is_permutation_family() ? s - 1u : s;
  return kValues[i % (sizeof kValues / sizeof kValues[0])];
}

}  // namespace internal

inline std::string render_svg(const HamCycle& c, const DrawOptions& opt = {}) {
  require_valid(c);
  using internal::fmt;
  std::size_t n = c.size();
  double center = opt.size / 2;
  double radius = opt.size * 0.45;
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(opt.size) + "\" height=\"" +
                  fmt(opt.size) + "\" viewBox=\"0 0 " + fmt(opt.size) + " " + fmt(opt.size) + "\">\n";
  s += "<title>" + c.graph.describe() + (c.construction.empty() ? "" : " " + c.construction) + "</title>\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  std::vector<Point> p = circle_layout(n, radius, center);
  if (opt.mode == DrawMode::kRings) {
    const double pi = std::acos(-1.0);
    std::size_t rings = c.graph.word_length();
    double inner = radius * 0.35;
    double width = (radius - inner) / static_cast<double>(rings);
    double half = pi / static_cast<double>(n);
    for (std::size_t j = 0; j < rings; ++j) {
      double r0 = radius - static_cast<double>(j + 1) * width;
      double r1 = r0 + width;
      for (std::size_t i = 0; i < n; ++i) {
        double a = 2.0 * pi * static_cast<double>(i) / static_cast<double>(n);
        auto at = [&](double r, double t) { return fmt(center + r * std::sin(t)) + " " + fmt(center - r * std::cos(t)); };
        s += "<path d=\"M " + at(r1, a - half) + " A " + fmt(r1) + " " + fmt(r1) + " 0 0 1 " + at(r1, a + half) +
             " L " + at(r0, a + half) + " A " + fmt(r0) + " " + fmt(r0) + " 0 0 0 " + at(r0, a - half) +
             " Z\" fill=\"" + internal::symbol_color(c.graph, c.vertices[i][j]) +
             "\" stroke=\"#808080\" stroke-width=\"0.2\"/>\n";
      }
    }
    return s + "</svg>\n";
  }
  if (opt.mode == DrawMode::kGraph) {
    internal::CyclePositions pos(c);
    std::vector<Index> nb;
    s += "<g stroke=\"#4477aa\" stroke-width=\"0.6\" fill=\"none\">\n";
    for (std::size_t i = 0; i < n; ++i) {
      c.graph.neighbor_indices(c.vertices[i], nb);
      for (Index y : nb) {
        std::size_t j = pos.pos_of[y];
        if (j <= i || j == i + 1 || (i == 0 && j + 1 == n)) continue;
        s += "<line x1=\"" + fmt(p[i].x) + "\" y1=\"" + fmt(p[i].y) + "\" x2=\"" + fmt(p[j].x) + "\" y2=\"" +
             fmt(p[j].y) + "\"/>\n";
      }
    }
    s += "</g>\n";
  }
  s += "<polygon fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < n; ++i) s += (i ? " " : "") + fmt(p[i].x) + "," + fmt(p[i].y);
  s += "\"/>\n";
  double dot = std::max(1.0, std::min(5.0, 600.0 / static_cast<double>(n)));
  for (std::size_t i = 0; i < n; ++i) {
    s += "<circle cx=\"" + fmt(p[i].x) + "\" cy=\"" + fmt(p[i].y) + "\" r=\"" + fmt(dot) + "\"/>\n";
  }
  return s + "</svg>\n";
}

}  // namespace hamcomp
