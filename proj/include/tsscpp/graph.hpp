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

// The planar graph G_n whose perfect matchings are in bijection with
// totally symmetric self-complementary plane partitions of order n + 1.
//
// Vertices are lattice points (x1, x2) with 0 <= x1 <= 2n and
// x1 <= x2 <= 2n + 1, except that (2n, 2n + 1) is absent when n is odd.
// Edges come in three families:
//   horizontal  (x1, x2) -- (x1 + 1, x2)       when x1 + x2 is odd,
//   vertical    (x1, x2) -- (x1, x2 + 1),
//   diagonal    (x1, x1) -- (x1 + 1, x1 + 1).
// Vertices are indexed in lexicographic (x1, x2) order.

#ifndef TSSCPP_GRAPH_HPP_
#define TSSCPP_GRAPH_HPP_

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tsscpp/error.hpp"

namespace tsscpp {

struct VertexCoord {
  int x1 = 0;  // column
  int x2 = 0;  // row

  int parity() const { return ((x1 + x2) % 2 + 2) % 2; }
  bool on_diagonal() const { return x1 == x2; }

  auto operator<=>(const VertexCoord&) const = default;

  // "x1,x2"
  std::string ToString() const {
    return std::to_string(x1) + "," + std::to_string(x2);
  }

  static VertexCoord Parse(std::string_view text) {
    const std::size_t comma = text.find(',');
    auto parse_int = [&](std::string_view s) {
      if (s.empty()) {
        throw Error(ErrorCode::kInvalidParameter,
                    "malformed coordinate '" + std::string(text) + "'");
      }
      std::size_t start = (s[0] == '-') ? 1 : 0;
      if (start == s.size()) {
        throw Error(ErrorCode::kInvalidParameter,
                    "malformed coordinate '" + std::string(text) + "'");
      }
      for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
          throw Error(ErrorCode::kInvalidParameter,
                      "malformed coordinate '" + std::string(text) + "'");
        }
      }
      return std::stoi(std::string(s));
    };
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidParameter,
                  "malformed coordinate '" + std::string(text) + "'");
    }
    return VertexCoord{parse_int(text.substr(0, comma)),
                       parse_int(text.substr(comma + 1))};
  }

  friend std::ostream& operator<<(std::ostream& os, const VertexCoord& v) {
    return os << "(" << v.x1 << "," << v.x2 << ")";
  }
};

// The distinguished vertex b = (2n, 2n + 1 - (n mod 2)).
inline VertexCoord BVertex(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidParameter, "n must be >= 1");
  return VertexCoord{2 * n, 2 * n + 1 - n % 2};
}

// Membership in the vertex set of G_n without building the graph.
inline bool InVertexSet(int n, const VertexCoord& v) {
  if (v.x1 < 0 || v.x1 > 2 * n || v.x2 < v.x1 || v.x2 > 2 * n + 1) return false;
  return !(n % 2 == 1 && v.x1 == 2 * n && v.x2 == 2 * n + 1);
}

enum class EdgeKind { kHorizontal, kVertical, kDiagonal };

inline std::string_view EdgeKindName(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kHorizontal:
      return "horizontal";
    case EdgeKind::kVertical:
      return "vertical";
    case EdgeKind::kDiagonal:
      return "diagonal";
  }
  return "?";
}

// Undirected edge between vertex indices u < v.
struct Edge {
  int u = 0;
  int v = 0;
  EdgeKind kind = EdgeKind::kHorizontal;

  bool operator==(const Edge&) const = default;
};

// A face boundary, listed counter-clockwise in the integer-coordinate
// embedding.
struct Face {
  std::vector<int> cycle;

  bool Contains(int vertex) const {
    return std::find(cycle.begin(), cycle.end(), vertex) != cycle.end();
  }
};

class TsscppGraph {
 public:
  static TsscppGraph Build(int n) {
    if (n < 1) {
      throw Error(ErrorCode::kInvalidParameter,
                  "graph order n must be >= 1, got " + std::to_string(n));
    }
    TsscppGraph g;
    g.n_ = n;
    g.b_ = BVertex(n);
    for (int x1 = 0; x1 <= 2 * n; ++x1) {
      for (int x2 = x1; x2 <= 2 * n + 1; ++x2) {
        if (n % 2 == 1 && x1 == 2 * n && x2 == 2 * n + 1) continue;
        g.vertices_.push_back({x1, x2});
      }
    }
    g.adjacency_.assign(g.vertices_.size(), {});
    auto add = [&g](VertexCoord a, VertexCoord c, EdgeKind kind) {
      const int ia = g.IndexOf(a);
      const int ic = g.IndexOf(c);
      g.edges_.push_back({std::min(ia, ic), std::max(ia, ic), kind});
    };
    for (int x1 = 0; x1 <= 2 * n - 1; ++x1) {
      for (int x2 = x1; x2 <= 2 * n + 1; ++x2) {
        if ((x1 + x2) % 2 == 1) add({x1, x2}, {x1 + 1, x2}, EdgeKind::kHorizontal);
      }
    }
    const int last_vertical_column = 2 * n - (n % 2);
    for (int x1 = 0; x1 <= last_vertical_column; ++x1) {
      for (int x2 = x1; x2 <= 2 * n; ++x2) {
        add({x1, x2}, {x1, x2 + 1}, EdgeKind::kVertical);
      }
    }
    for (int x1 = 0; x1 <= 2 * n - 1; ++x1) {
      add({x1, x1}, {x1 + 1, x1 + 1}, EdgeKind::kDiagonal);
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& c) {
      return std::pair(a.u, a.v) < std::pair(c.u, c.v);
    });
    for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
      const Edge& edge = g.edges_[e];
      g.adjacency_[edge.u].push_back(edge.v);
      g.adjacency_[edge.v].push_back(edge.u);
      g.edge_index_[{edge.u, edge.v}] = e;
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    g.ComputeFaces();
    return g;
  }

  int n() const { return n_; }
  VertexCoord b() const { return b_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<VertexCoord>& vertices() const { return vertices_; }
  const VertexCoord& vertex(int index) const { return vertices_.at(index); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int index) const { return adjacency_.at(index); }
  int degree(int index) const { return static_cast<int>(adjacency_.at(index).size()); }

  // Bounded faces, each listed counter-clockwise.
  const std::vector<Face>& faces() const { return faces_; }
  // The outer boundary walk, listed counter-clockwise around the graph.
  const Face& outer_face() const { return outer_face_; }

  bool Contains(VertexCoord v) const { return InVertexSet(n_, v); }

  std::optional<int> FindIndex(VertexCoord v) const {
    if (!Contains(v)) return std::nullopt;
    const int column_offset = v.x1 * (2 * n_ + 2) - v.x1 * (v.x1 - 1) / 2;
    return column_offset + (v.x2 - v.x1);
  }

  int IndexOf(VertexCoord v) const {
    if (auto index = FindIndex(v)) return *index;
    throw Error(ErrorCode::kUnknownVertex,
                "vertex " + v.ToString() + " is not in G_" + std::to_string(n_));
  }

  std::optional<int> EdgeIndex(int a, int c) const {
    auto it = edge_index_.find({std::min(a, c), std::max(a, c)});
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }
  bool Adjacent(int a, int c) const { return EdgeIndex(a, c).has_value(); }

  nlohmann::json ToJson() const {
    nlohmann::json j;
    j["n"] = n_;
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : vertices_) verts.push_back({v.x1, v.x2});
    j["vertices"] = std::move(verts);
    nlohmann::json es = nlohmann::json::array();
    for (const auto& e : edges_) {
      const auto& a = vertices_[e.u];
      const auto& c = vertices_[e.v];
      es.push_back({{a.x1, a.x2}, {c.x1, c.x2}});
    }
    j["edges"] = std::move(es);
    return j;
  }

  // Graphviz rendering with vertices pinned at their lattice coordinates.
  std::string ToDot() const {
    std::ostringstream out;
    out << "graph G" << n_ << " {\n  node [shape=point];\n";
    for (int i = 0; i < num_vertices(); ++i) {
      const auto& v = vertices_[i];
      out << "  v" << i << " [label=\"" << v.ToString() << "\", pos=\"" << v.x1
          << "," << v.x2 << "!\"];\n";
    }
    for (const auto& e : edges_) {
      out << "  v" << e.u << " -- v" << e.v << ";\n";
    }
    out << "}\n";
    return out.str();
  }

 private:
  TsscppGraph() = default;

  // Faces from the rotation system of the straight-line embedding at integer
  // coordinates. Walking each directed edge with the face on its left gives
  // counter-clockwise bounded faces and one clockwise outer walk.
  void ComputeFaces() {
    const int nv = num_vertices();
    std::vector<std::vector<int>> rotation(nv);
    for (int v = 0; v < nv; ++v) {
      rotation[v] = adjacency_[v];
      const auto& p = vertices_[v];
      std::sort(rotation[v].begin(), rotation[v].end(), [&](int a, int c) {
        const auto& pa = vertices_[a];
        const auto& pc = vertices_[c];
        return std::atan2(pa.x2 - p.x2, pa.x1 - p.x1) <
               std::atan2(pc.x2 - p.x2, pc.x1 - p.x1);
      });
    }
    std::map<std::pair<int, int>, bool> used;
    for (const auto& e : edges_) {
      for (auto [start_from, start_to] : {std::pair(e.u, e.v), std::pair(e.v, e.u)}) {
        if (used[{start_from, start_to}]) continue;
        Face face;
        int from = start_from;
        int to = start_to;
        long long twice_area = 0;
        while (!used[{from, to}]) {
          used[{from, to}] = true;
          face.cycle.push_back(from);
          const auto& pf = vertices_[from];
          const auto& pt = vertices_[to];
          twice_area += static_cast<long long>(pf.x1) * pt.x2 -
                        static_cast<long long>(pt.x1) * pf.x2;
          const auto& around = rotation[to];
          const auto pos = std::find(around.begin(), around.end(), from) - around.begin();
          const int next = around[(pos + around.size() - 1) % around.size()];
          from = to;
          to = next;
        }
        if (twice_area > 0) {
          faces_.push_back(std::move(face));
        } else {
          std::reverse(face.cycle.begin(), face.cycle.end());
          outer_face_ = std::move(face);
        }
      }
    }
  }

  int n_ = 0;
  VertexCoord b_;
  std::vector<VertexCoord> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::map<std::pair<int, int>, int> edge_index_;
  std::vector<Face> faces_;
  Face outer_face_;
};

// A perfect matching, stored as the partner of every vertex.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<int> mate) : mate_(std::move(mate)) {}

  int mate(int v) const { return mate_.at(v); }
  const std::vector<int>& mates() const { return mate_; }
  int size() const { return static_cast<int>(mate_.size()); }

  // Matched pairs (u, v) with u < v, ordered by u.
  std::vector<std::pair<int, int>> Pairs() const {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < size(); ++v) {
      if (mate_[v] > v) pairs.emplace_back(v, mate_[v]);
    }
    return pairs;
  }

  bool Contains(int a, int c) const {
    return a >= 0 && a < size() && mate_[a] == c;
  }

  bool operator==(const Matching&) const = default;

 private:
  std::vector<int> mate_;
};

// Every vertex covered exactly once, by edges of the graph only.
inline bool IsPerfectMatching(const TsscppGraph& graph, const Matching& m) {
  if (m.size() != graph.num_vertices()) return false;
  for (int v = 0; v < m.size(); ++v) {
    const int w = m.mate(v);
    if (w < 0 || w >= m.size() || w == v) return false;
    if (m.mate(w) != v) return false;
    if (!graph.Adjacent(v, w)) return false;
  }
  return true;
}

inline constexpr int kDefaultEnumerationCap = 4;

// TSSCPP_ENUM_CAP overrides the default cap when set to a non-negative integer.
inline int EnumerationCapFromEnv() {
  const char* raw = std::getenv("TSSCPP_ENUM_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 0) {
    throw Error(ErrorCode::kInvalidParameter,
                std::string("TSSCPP_ENUM_CAP must be a non-negative integer, got '") +
                    raw + "'");
  }
  return static_cast<int>(value);
}

// Visits every perfect matching exactly once. The lowest-index uncovered
// vertex is always matched next, trying neighbours in index order.
inline void ForEachMatching(const TsscppGraph& graph,
                            const std::function<void(const Matching&)>& visit,
                            int cap = kDefaultEnumerationCap) {
  if (graph.n() > cap) {
    throw Error(ErrorCode::kResourceLimit,
                "exhaustive enumeration of G_" + std::to_string(graph.n()) +
                    " exceeds the cap n <= " + std::to_string(cap));
  }
  const int nv = graph.num_vertices();
  std::vector<int> mate(nv, -1);
  std::function<void(int)> extend = [&](int from) {
    int v = from;
    while (v < nv && mate[v] != -1) ++v;
    if (v == nv) {
      visit(Matching(mate));
      return;
    }
    for (int w : graph.neighbors(v)) {
      if (mate[w] != -1) continue;
      mate[v] = w;
      mate[w] = v;
      extend(v + 1);
      mate[v] = -1;
      mate[w] = -1;
    }
  };
  extend(0);
}

inline std::vector<Matching> EnumerateMatchings(const TsscppGraph& graph,
                                                int cap = kDefaultEnumerationCap) {
  std::vector<Matching> all;
  ForEachMatching(graph, [&all](const Matching& m) { all.push_back(m); }, cap);
  return all;
}

}  // namespace tsscpp

#endif  // TSSCPP_GRAPH_HPP_
