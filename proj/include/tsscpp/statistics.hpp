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

// Local statistics of a uniformly random perfect matching of G_n. The edges
// form a Pfaffian point process:
//
//   P[e_1, ..., e_m] = prod_k K(v_{2k-1}, v_{2k}) * Pf( (K^{-1}(v_i, v_j))^T ),
//
// with the 2m x 2m submatrix taken in query order.

#ifndef TSSCPP_STATISTICS_HPP_
#define TSSCPP_STATISTICS_HPP_

#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tsscpp/closed_form.hpp"
#include "tsscpp/error.hpp"
#include "tsscpp/graph.hpp"
#include "tsscpp/linalg.hpp"
#include "tsscpp/rational.hpp"

namespace tsscpp {

enum class InverseSource { kClosedForm, kExactInverse };

struct EdgeQuery {
  int n = 0;
  std::vector<std::pair<VertexCoord, VertexCoord>> edges;

  // Throws invalid-parameter for non-edges or shared endpoints.
  void Validate(const TsscppGraph& graph) const {
    if (graph.n() != n) throw Error(ErrorCode::kInvalidParameter, "graph order mismatch");
    std::set<int> used;
    for (const auto& [a, b] : edges) {
      const auto ia = graph.FindIndex(a);
      const auto ib = graph.FindIndex(b);
      if (!ia || !ib || !graph.Adjacent(*ia, *ib)) {
        throw Error(ErrorCode::kInvalidParameter,
                    "(" + a.ToString() + ")-(" + b.ToString() + ") is not an edge of G_" +
                        std::to_string(n));
      }
      if (!used.insert(*ia).second || !used.insert(*ib).second) {
        throw Error(ErrorCode::kInvalidParameter, "query edges share an endpoint");
      }
    }
  }
};

// Entry oracle for K^{-1}, backed either by the closed form or by an exact
// inverse of the Kasteleyn matrix. Not thread-safe (closed-form memo tables).
class CorrelationKernel {
 public:
  CorrelationKernel(int n, InverseSource source)
      : graph_(TsscppGraph::Build(n)), kasteleyn_(KasteleynMatrix(graph_)), source_(source) {
    if (source == InverseSource::kClosedForm) {
      closed_form_ = std::make_unique<ClosedFormInverse>(n);
    } else {
      inverse_ = Invert(kasteleyn_.dense());
    }
  }

  int n() const { return graph_.n(); }
  InverseSource source() const { return source_; }
  const TsscppGraph& graph() const { return graph_; }
  const SkewMatrix& kasteleyn() const { return kasteleyn_; }

  Rational Inverse(int i, int j) const {
    if (closed_form_) return closed_form_->Entry(graph_.vertex(i), graph_.vertex(j));
    return inverse_(i, j);
  }

  Rational EdgeProbability(const EdgeQuery& query) const {
    query.Validate(graph_);
    std::vector<int> v;
    Rational weight = 1;
    for (const auto& [a, b] : query.edges) {
      const int ia = graph_.IndexOf(a);
      const int ib = graph_.IndexOf(b);
      weight *= kasteleyn_(ia, ib);
      v.push_back(ia);
      v.push_back(ib);
    }
    const int d = static_cast<int>(v.size());
    Matrix sub(d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) sub(i, j) = i == j ? Rational(0) : Inverse(v[i], v[j]);
    }
    return weight * Pfaffian(SkewMatrix::FromDense(sub.Transpose()));
  }

  // P(e) for every edge, in graph().edges() order.
  std::vector<Rational> MarginalField() const {
    std::vector<Rational> field;
    for (const auto& e : graph_.edges()) {
      field.push_back(kasteleyn_(e.u, e.v) * Inverse(e.v, e.u));
    }
    return field;
  }

 private:
  TsscppGraph graph_;
  SkewMatrix kasteleyn_;
  InverseSource source_;
  std::unique_ptr<ClosedFormInverse> closed_form_;
  Matrix inverse_;
};

inline Rational EdgeProbability(const EdgeQuery& query, InverseSource source) {
  return CorrelationKernel(query.n, source).EdgeProbability(query);
}

inline std::vector<Rational> MarginalField(int n, InverseSource source) {
  return CorrelationKernel(n, source).MarginalField();
}

// Sum of incident edge probabilities at every vertex; all ones for a valid
// field.
inline std::vector<Rational> VertexSums(const TsscppGraph& graph,
                                        const std::vector<Rational>& field) {
  std::vector<Rational> sums(graph.num_vertices());
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    sums[graph.edges()[e].u] += field[e];
    sums[graph.edges()[e].v] += field[e];
  }
  return sums;
}

// "x1,x2,y1,y2,probability" per edge.
inline std::string MarginalFieldCsv(const TsscppGraph& graph,
                                    const std::vector<Rational>& field) {
  std::ostringstream out;
  out << "x1,x2,y1,y2,probability\n";
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const auto& a = graph.vertex(graph.edges()[e].u);
    const auto& b = graph.vertex(graph.edges()[e].v);
    out << a.x1 << "," << a.x2 << "," << b.x1 << "," << b.x2 << "," << field[e] << "\n";
  }
  return out.str();
}

}  // namespace tsscpp

#endif  // TSSCPP_STATISTICS_HPP_
