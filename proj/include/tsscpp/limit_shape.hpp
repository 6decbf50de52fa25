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

// Large-n geometry in rescaled coordinates
//   X = x1 / n - 2,    Y = (x2 / n - 2) / sqrt(3),
// which send the corners of G_n to (-2, -2/sqrt(3)), (-2, 0) and (0, 0).
// The conjectured arctic curve is the circle X^2 + Y^2 = 4: outside it the
// local dimer picture is frozen, inside it is liquid. The circle is where the
// two saddle points of the asymptotic integrand collide.
//
// Everything here is binary64.

#ifndef TSSCPP_LIMIT_SHAPE_HPP_
#define TSSCPP_LIMIT_SHAPE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tsscpp/error.hpp"
#include "tsscpp/graph.hpp"

namespace tsscpp {

struct RescaledPoint {
  double X = 0;
  double Y = 0;
  int n = 0;

  static RescaledPoint FromLattice(int n, double x1, double x2) {
    if (n < 1) throw Error(ErrorCode::kInvalidParameter, "n must be >= 1");
    return {x1 / n - 2.0, (x2 / n - 2.0) / std::sqrt(3.0), n};
  }

  // Nearest lattice point: x1 = round((X + 2) n), x2 = round((sqrt(3) Y + 2) n).
  VertexCoord ToLattice() const {
    return {static_cast<int>(std::lround((X + 2.0) * n)),
            static_cast<int>(std::lround((std::sqrt(3.0) * Y + 2.0) * n))};
  }

  double RadiusSquared() const { return X * X + Y * Y; }
};

struct SaddleRootPair {
  std::complex<double> plus;
  std::complex<double> minus;
  double discriminant = 0;  // Y^2 (X^2 + Y^2 - 4)
};

inline double SaddleDiscriminant(double X, double Y) { return Y * Y * (X * X + Y * Y - 4.0); }

// (2X - Y^2 + 4 +- sqrt(Y^2 (X^2 + Y^2 - 4))) / (4 - Y^2).
inline SaddleRootPair SaddleRoots(double X, double Y) {
  const double denom = 4.0 - Y * Y;
  if (std::abs(denom) < 1e-12) {
    throw Error(ErrorCode::kSingularParameter, "saddle roots are undefined at Y^2 = 4");
  }
  SaddleRootPair r;
  r.discriminant = SaddleDiscriminant(X, Y);
  const std::complex<double> root = std::sqrt(std::complex<double>(r.discriminant, 0.0));
  const double base = 2.0 * X - Y * Y + 4.0;
  r.plus = (base + root) / denom;
  r.minus = (base - root) / denom;
  return r;
}

// Lower branch of the circle over the rescaled domain, Y = -sqrt(4 - X^2).
inline double ConjecturedBoundary(double X) {
  if (!(X >= -2.0 && X <= 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "boundary is defined for -2 <= X <= 0");
  }
  return -std::sqrt(std::max(0.0, 4.0 - X * X));
}

enum class Region { kFrozen, kLiquid, kBoundary };

// Classification by the circle, with a tolerance band around X^2 + Y^2 = 4.
inline Region CircleRegion(double X, double Y, double tolerance = 1e-9) {
  const double s = X * X + Y * Y - 4.0;
  if (std::abs(s) <= tolerance) return Region::kBoundary;
  return s > 0 ? Region::kFrozen : Region::kLiquid;
}

// Classification by the saddle points: a complex-conjugate pair means
// liquid, two distinct real roots mean frozen, a double root is boundary.
inline Region SaddleRegion(double X, double Y, double tolerance = 1e-9) {
  const auto roots = SaddleRoots(X, Y);
  if (std::abs(roots.discriminant) <= tolerance) return Region::kBoundary;
  return std::abs(roots.plus.imag()) > 0 ? Region::kLiquid : Region::kFrozen;
}

struct GridAgreement {
  int points = 0;
  int compared = 0;
  int disagreements = 0;
  int skipped_double_root = 0;  // Y = 0, where the roots coincide for all X
  int skipped_singular = 0;     // Y^2 = 4
};

// Compares the two classifications on the grid |X|, |Y| <= 2 with the given
// step. Grid coordinates are integer multiples of the step.
inline GridAgreement CompareSaddleAndCircle(double step = 0.05, double tolerance = 1e-9) {
  GridAgreement g;
  const int half = static_cast<int>(std::lround(2.0 / step));
  for (int a = -half; a <= half; ++a) {
    for (int c = -half; c <= half; ++c) {
      const double X = a * step;
      const double Y = c * step;
      ++g.points;
      if (std::abs(4.0 - Y * Y) < 1e-12) {
        ++g.skipped_singular;
        continue;
      }
      if (c == 0) {
        ++g.skipped_double_root;
        continue;
      }
      ++g.compared;
      if (SaddleRegion(X, Y, tolerance) != CircleRegion(X, Y, tolerance)) ++g.disagreements;
    }
  }
  return g;
}

enum class Orientation { kHorizontal = 0, kVertical = 1, kDiagonal = 2 };

inline Orientation OrientationOf(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kHorizontal:
      return Orientation::kHorizontal;
    case EdgeKind::kVertical:
      return Orientation::kVertical;
    case EdgeKind::kDiagonal:
      return Orientation::kDiagonal;
  }
  return Orientation::kHorizontal;
}

inline constexpr double kFrozenThreshold = 0.95;
inline constexpr int kDefaultWindow = 8;

// A diagonal vertex (x, x) has no downward vertical edge; its diagonal edges
// take that slot. So for the frozen test, diagonal dimers count as vertical:
// in the frozen corner near the origin, vertical and diagonal dimers
// interleave in one rigid pattern.
struct WindowDensity {
  RescaledPoint center;  // mean position of the window's vertices
  int vertices = 0;
  std::array<double, 3> density{};  // indexed by Orientation

  double MaxDensity() const { return std::max(density[0], density[1] + density[2]); }
  bool Frozen(double threshold = kFrozenThreshold) const { return MaxDensity() > threshold; }
};

// Orientation densities over square windows of side `window` lattice units.
// For each vertex, the probabilities of its incident edges (one dimer per
// vertex) are split by orientation, then averaged over the window, so each
// density triple sums to one. Windows with fewer than `min_vertices`
// vertices (slivers along the diagonal) are dropped.
inline std::vector<WindowDensity> FrozenProfile(const TsscppGraph& graph,
                                                const std::vector<double>& edge_frequency,
                                                std::int64_t samples, int window,
                                                int min_vertices = 0) {
  if (samples <= 0) throw Error(ErrorCode::kInvalidParameter, "empty sample set");
  if (window < 1) throw Error(ErrorCode::kInvalidParameter, "window must be >= 1");
  if (edge_frequency.size() != graph.edges().size()) {
    throw Error(ErrorCode::kInvalidShape, "one frequency per edge expected");
  }
  if (min_vertices <= 0) min_vertices = std::max(1, window * window / 2);
  struct Accumulator {
    double sx = 0, sy = 0;
    int count = 0;
    std::array<double, 3> mass{};
  };
  std::map<std::pair<int, int>, Accumulator> boxes;
  std::vector<std::array<double, 3>> per_vertex(graph.num_vertices());
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const auto& edge = graph.edges()[e];
    const int o = static_cast<int>(OrientationOf(edge.kind));
    per_vertex[edge.u][o] += edge_frequency[e];
    per_vertex[edge.v][o] += edge_frequency[e];
  }
  for (int v = 0; v < graph.num_vertices(); ++v) {
    const auto& p = graph.vertex(v);
    auto& box = boxes[{p.x1 / window, p.x2 / window}];
    box.sx += p.x1;
    box.sy += p.x2;
    ++box.count;
    for (int o = 0; o < 3; ++o) box.mass[o] += per_vertex[v][o];
  }
  std::vector<WindowDensity> out;
  for (const auto& [key, box] : boxes) {
    if (box.count < min_vertices) continue;
    WindowDensity w;
    w.center = RescaledPoint::FromLattice(graph.n(), box.sx / box.count, box.sy / box.count);
    w.vertices = box.count;
    for (int o = 0; o < 3; ++o) w.density[o] = box.mass[o] / box.count;
    out.push_back(w);
  }
  return out;
}

struct FrozenSummary {
  int outer_windows = 0;   // X^2 + Y^2 > outer
  int outer_frozen = 0;
  int inner_windows = 0;   // X^2 + Y^2 < inner
  int inner_unfrozen = 0;

  double OuterFrozenFraction() const {
    return outer_windows == 0 ? 0.0 : static_cast<double>(outer_frozen) / outer_windows;
  }
  double InnerUnfrozenFraction() const {
    return inner_windows == 0 ? 0.0 : static_cast<double>(inner_unfrozen) / inner_windows;
  }
};

inline FrozenSummary SummarizeProfile(const std::vector<WindowDensity>& profile,
                                      double outer = 4.6, double inner = 3.4,
                                      double threshold = kFrozenThreshold) {
  FrozenSummary s;
  for (const auto& w : profile) {
    const double r2 = w.center.RadiusSquared();
    if (r2 > outer) {
      ++s.outer_windows;
      s.outer_frozen += w.Frozen(threshold);
    } else if (r2 < inner) {
      ++s.inner_windows;
      s.inner_unfrozen += !w.Frozen(threshold);
    }
  }
  return s;
}

// "X,Y,d_h,d_v,d_d,frozen" per window.
inline std::string FrozenProfileCsv(const std::vector<WindowDensity>& profile,
                                    double threshold = kFrozenThreshold) {
  std::ostringstream out;
  out << "X,Y,d_h,d_v,d_d,frozen\n";
  for (const auto& w : profile) {
    out << w.center.X << "," << w.center.Y << "," << w.density[0] << "," << w.density[1] << ","
        << w.density[2] << "," << (w.Frozen(threshold) ? 1 : 0) << "\n";
  }
  return out.str();
}

}  // namespace tsscpp

#endif  // TSSCPP_LIMIT_SHAPE_HPP_
