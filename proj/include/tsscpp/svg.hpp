// Copyright 2026 The TSSCPP Dimers Authors.
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

// SVG rendering of a single matching. Output is a pure function of the
// inputs: fixed-precision numbers, edges in vertex order.

#ifndef TSSCPP_SVG_HPP_
#define TSSCPP_SVG_HPP_

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "tsscpp/error.hpp"
#include "tsscpp/graph.hpp"
#include "tsscpp/limit_shape.hpp"

namespace tsscpp {

struct RenderOptions {
  bool rotate = false;          // turn the picture by pi/6
  bool circle_overlay = false;  // draw the conjectured arctic arc
  double scale = 12.0;          // pixels per lattice unit
  int overlay_points = 64;
};

inline const char* OrientationColor(Orientation o) {
  switch (o) {
    case Orientation::kHorizontal:
      return "#d62728";
    case Orientation::kVertical:
      return "#1f77b4";
    case Orientation::kDiagonal:
      return "#2ca02c";
  }
  return "#000000";
}

namespace internal {

inline std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v == 0.0 ? 0.0 : v);  // no "-0.000"
  return buf;
}

class Projector {
 public:
  Projector(int n, const RenderOptions& options) : options_(options) {
    const double theta = options.rotate ? std::numbers::pi / 6 : 0.0;
    cos_ = std::cos(theta);
    sin_ = std::sin(theta);
    // Bounding box of the domain corners (0,0), (0,2n+1), (2n,2n+1), (2n,2n).
    const double corners[4][2] = {{0, 0}, {0, 2.0 * n + 1}, {2.0 * n, 2.0 * n + 1},
                                  {2.0 * n, 2.0 * n}};
    min_x_ = min_y_ = 1e300;
    max_x_ = max_y_ = -1e300;
    for (const auto& c : corners) {
      const auto [x, y] = Turn(c[0], c[1]);
      min_x_ = std::min(min_x_, x);
      max_x_ = std::max(max_x_, x);
      min_y_ = std::min(min_y_, y);
      max_y_ = std::max(max_y_, y);
    }
  }

  // Lattice point to screen, with x2 pointing up.
  std::pair<double, double> operator()(double x1, double x2) const {
    const auto [x, y] = Turn(x1, x2);
    return {(x - min_x_ + kMargin) * options_.scale, (max_y_ - y + kMargin) * options_.scale};
  }

  double width() const { return (max_x_ - min_x_ + 2 * kMargin) * options_.scale; }
  double height() const { return (max_y_ - min_y_ + 2 * kMargin) * options_.scale; }

 private:
  static constexpr double kMargin = 1.0;

  std::pair<double, double> Turn(double x, double y) const {
    return {cos_ * x - sin_ * y, sin_ * x + cos_ * y};
  }

  RenderOptions options_;
  double cos_ = 1, sin_ = 0;
  double min_x_, max_x_, min_y_, max_y_;
};

}  // namespace internal

// Points of the arc Y = -sqrt(4 - X^2), -2 <= X <= 0, in lattice units,
// clipped to the domain (x2 >= x1).
inline std::vector<std::pair<double, double>> BoundaryOverlay(int n, int points) {
  if (n < 1 || points < 2) throw Error(ErrorCode::kInvalidParameter, "bad overlay request");
  std::vector<std::pair<double, double>> out;
  for (int k = 0; k < points; ++k) {
    const double X = -2.0 + 2.0 * k / (points - 1);
    const double Y = ConjecturedBoundary(X);
    const double x1 = (X + 2.0) * n;
    const double x2 = (std::sqrt(3.0) * Y + 2.0) * n;
    if (x2 < x1 || x2 > 2.0 * n + 1) continue;
    out.emplace_back(x1, x2);
  }
  return out;
}

inline std::string RenderSvg(const TsscppGraph& graph, const Matching& matching,
                             const RenderOptions& options = {}) {
  if (!IsPerfectMatching(graph, matching)) {
    throw Error(ErrorCode::kInvalidParameter, "not a perfect matching of the graph");
  }
  const internal::Projector at(graph.n(), options);
  using internal::Fixed;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Fixed(at.width()) +
         "\" height=\"" + Fixed(at.height()) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out += "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (const auto& e : graph.edges()) {
    const auto& a = graph.vertex(e.u);
    const auto& b = graph.vertex(e.v);
    const auto [ax, ay] = at(a.x1, a.x2);
    const auto [bx, by] = at(b.x1, b.x2);
    out += "<line x1=\"" + Fixed(ax) + "\" y1=\"" + Fixed(ay) + "\" x2=\"" + Fixed(bx) +
           "\" y2=\"" + Fixed(by) + "\"/>\n";
  }
  out += "</g>\n<g stroke-width=\"" + Fixed(options.scale * 0.4) + "\" stroke-linecap=\"round\">\n";
  for (const auto& [u, v] : matching.Pairs()) {
    const auto& a = graph.vertex(u);
    const auto& b = graph.vertex(v);
    const auto kind = graph.edges()[*graph.EdgeIndex(u, v)].kind;
    const auto [ax, ay] = at(a.x1, a.x2);
    const auto [bx, by] = at(b.x1, b.x2);
    out += "<line x1=\"" + Fixed(ax) + "\" y1=\"" + Fixed(ay) + "\" x2=\"" + Fixed(bx) +
           "\" y2=\"" + Fixed(by) + "\" stroke=\"" + OrientationColor(OrientationOf(kind)) +
           "\"/>\n";
  }
  out += "</g>\n";
  if (options.circle_overlay) {
    out += "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& [x1, x2] : BoundaryOverlay(graph.n(), options.overlay_points)) {
      const auto [x, y] = at(x1, x2);
      if (!first) out += " ";
      out += Fixed(x) + "," + Fixed(y);
      first = false;
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tsscpp

#endif  // TSSCPP_SVG_HPP_
