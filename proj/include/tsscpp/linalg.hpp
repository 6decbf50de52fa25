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

// Exact dense linear algebra over the rationals: the Kasteleyn matrix of G_n,
// Pfaffians, determinants and inverses.

#ifndef TSSCPP_LINALG_HPP_
#define TSSCPP_LINALG_HPP_

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tsscpp/error.hpp"
#include "tsscpp/graph.hpp"
#include "tsscpp/rational.hpp"

namespace tsscpp {

// Square dense matrix of rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {
    if (dim < 0) throw Error(ErrorCode::kInvalidShape, "negative dimension");
  }

  static Matrix Identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  int dim() const { return dim_; }
  Rational& operator()(int i, int j) { return data_[Offset(i, j)]; }
  const Rational& operator()(int i, int j) const { return data_[Offset(i, j)]; }

  bool operator==(const Matrix&) const = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw Error(ErrorCode::kInvalidShape, "dimension mismatch");
    Matrix c(a.dim_);
    for (int i = 0; i < a.dim_; ++i) {
      for (int k = 0; k < a.dim_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.dim_; ++j) {
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  Matrix Transpose() const {
    Matrix t(dim_);
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

 private:
  std::size_t Offset(int i, int j) const {
    return static_cast<std::size_t>(i) * dim_ + j;
  }

  int dim_ = 0;
  std::vector<Rational> data_;
};

// Exact determinant by Gaussian elimination.
inline Rational Determinant(Matrix a) {
  const int d = a.dim();
  Rational det = 1;
  for (int c = 0; c < d; ++c) {
    int pivot = c;
    while (pivot < d && a(pivot, c).is_zero()) ++pivot;
    if (pivot == d) return 0;
    if (pivot != c) {
      for (int j = 0; j < d; ++j) std::swap(a(c, j), a(pivot, j));
      det = -det;
    }
    det *= a(c, c);
    for (int r = c + 1; r < d; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rational factor = a(r, c) / a(c, c);
      for (int j = c; j < d; ++j) {
        if (!a(c, j).is_zero()) a(r, j) -= factor * a(c, j);
      }
    }
  }
  return det;
}

// Gauss-Jordan inverse; throws singular-matrix when no pivot exists.
inline Matrix Invert(Matrix a) {
  const int d = a.dim();
  Matrix inv = Matrix::Identity(d);
  for (int c = 0; c < d; ++c) {
    int pivot = c;
    while (pivot < d && a(pivot, c).is_zero()) ++pivot;
    if (pivot == d) {
      throw Error(ErrorCode::kSingularMatrix,
                  "matrix is singular (no pivot in column " + std::to_string(c) + ")");
    }
    if (pivot != c) {
      for (int j = 0; j < d; ++j) {
        std::swap(a(c, j), a(pivot, j));
        std::swap(inv(c, j), inv(pivot, j));
      }
    }
    const Rational scale = 1 / a(c, c);
    for (int j = 0; j < d; ++j) {
      if (!a(c, j).is_zero()) a(c, j) *= scale;
      if (!inv(c, j).is_zero()) inv(c, j) *= scale;
    }
    for (int r = 0; r < d; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const Rational factor = a(r, c);
      for (int j = 0; j < d; ++j) {
        if (!a(c, j).is_zero()) a(r, j) -= factor * a(c, j);
        if (!inv(c, j).is_zero()) inv(r, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

// Skew-symmetric matrix, optionally labelled by vertex coordinates. Writes
// go through Set, which keeps M[j][i] = -M[i][j].
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(int dim) : m_(dim) {}

  // Throws invalid-shape unless `dense` is skew-symmetric.
  static SkewMatrix FromDense(const Matrix& dense,
                              std::vector<VertexCoord> labels = {}) {
    for (int i = 0; i < dense.dim(); ++i) {
      for (int j = i; j < dense.dim(); ++j) {
        if (dense(i, j) != -dense(j, i)) {
          throw Error(ErrorCode::kInvalidShape, "matrix is not skew-symmetric at (" +
                                                    std::to_string(i) + "," +
                                                    std::to_string(j) + ")");
        }
      }
    }
    SkewMatrix s;
    s.m_ = dense;
    s.SetLabels(std::move(labels));
    return s;
  }

  int dim() const { return m_.dim(); }
  const Rational& operator()(int i, int j) const { return m_(i, j); }
  const Matrix& dense() const { return m_; }

  void Set(int i, int j, const Rational& value) {
    if (i == j) {
      if (!value.is_zero()) throw Error(ErrorCode::kInvalidShape, "nonzero diagonal");
      return;
    }
    m_(i, j) = value;
    m_(j, i) = -value;
  }

  const std::vector<VertexCoord>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  void SetLabels(std::vector<VertexCoord> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != dim()) {
      throw Error(ErrorCode::kInvalidShape, "label count does not match dimension");
    }
    labels_ = std::move(labels);
  }

  std::optional<int> FindLabel(const VertexCoord& v) const {
    auto it = std::find(labels_.begin(), labels_.end(), v);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
  }

  // Simultaneous row/column permutation: result(i, j) = M(order[i], order[j]).
  SkewMatrix Permuted(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != dim()) {
      throw Error(ErrorCode::kInvalidShape, "permutation length mismatch");
    }
    SkewMatrix p(dim());
    for (int i = 0; i < dim(); ++i) {
      for (int j = 0; j < dim(); ++j) p.m_(i, j) = m_(order[i], order[j]);
    }
    if (has_labels()) {
      std::vector<VertexCoord> relabelled;
      for (int i : order) relabelled.push_back(labels_[i]);
      p.labels_ = std::move(relabelled);
    }
    return p;
  }

  bool operator==(const SkewMatrix&) const = default;

  nlohmann::json ToJson() const {
    nlohmann::json j;
    j["dimension"] = dim();
    if (has_labels()) {
      nlohmann::json labels = nlohmann::json::array();
      for (const auto& v : labels_) labels.push_back({v.x1, v.x2});
      j["labels"] = std::move(labels);
    }
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < dim(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < dim(); ++c) row.push_back(m_(r, c).ToString());
      rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
  }

 private:
  Matrix m_;
  std::vector<VertexCoord> labels_;
};

// The unsigned weight k(x, y) whose antisymmetrization is the Kasteleyn
// matrix. Even vertices point left along rows, up and down along columns,
// and diagonal vertices point down the diagonal.
inline int KasteleynArrow(const VertexCoord& x, const VertexCoord& y) {
  if (x.parity() == 0 && x.x2 == y.x2 && x.x1 - y.x1 == 1) return 1;
  if (x.parity() == 0 && x.x1 == y.x1 && (y.x2 - x.x2 == 1 || x.x2 - y.x2 == 1)) return 1;
  if (x.on_diagonal() && y.x1 == x.x1 - 1 && y.x2 == x.x1 - 1) return 1;
  return 0;
}

inline SkewMatrix KasteleynMatrix(const TsscppGraph& graph) {
  SkewMatrix k(graph.num_vertices());
  for (const Edge& e : graph.edges()) {
    const auto& a = graph.vertex(e.u);
    const auto& c = graph.vertex(e.v);
    k.Set(e.u, e.v, KasteleynArrow(a, c) - KasteleynArrow(c, a));
  }
  k.SetLabels(graph.vertices());
  return k;
}

struct OrientationReport {
  bool ok = true;
  std::vector<int> ccw_counts;       // one per bounded face
  std::vector<int> violating_faces;  // faces with an even count
};

// Counts, on every bounded face, the boundary edges whose arrow (x -> y when
// M(x, y) = +1) runs counter-clockwise. Kasteleyn's condition asks for odd.
inline OrientationReport CheckOrientation(const TsscppGraph& graph, const SkewMatrix& m) {
  if (m.dim() != graph.num_vertices()) {
    throw Error(ErrorCode::kInvalidShape, "matrix does not match the graph");
  }
  OrientationReport report;
  for (int f = 0; f < static_cast<int>(graph.faces().size()); ++f) {
    const auto& cycle = graph.faces()[f].cycle;
    int ccw = 0;
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const int from = cycle[t];
      const int to = cycle[(t + 1) % cycle.size()];
      if (m(from, to) > 0) ++ccw;
    }
    report.ccw_counts.push_back(ccw);
    if (ccw % 2 == 0) {
      report.ok = false;
      report.violating_faces.push_back(f);
    }
  }
  return report;
}

// Exact Pfaffian by skew-symmetric elimination: each step pairs index k with
// a pivot partner moved to k + 1 and replaces the trailing block by its
// skew Schur complement.
inline Rational Pfaffian(const SkewMatrix& m) {
  const int d = m.dim();
  if (d % 2 != 0) {
    throw Error(ErrorCode::kInvalidShape,
                "Pfaffian of odd dimension " + std::to_string(d));
  }
  Matrix a = m.dense();
  Rational pf = 1;
  for (int k = 0; k < d; k += 2) {
    int pivot = k + 1;
    while (pivot < d && a(k, pivot).is_zero()) ++pivot;
    if (pivot == d) return 0;
    if (pivot != k + 1) {
      for (int j = 0; j < d; ++j) std::swap(a(k + 1, j), a(pivot, j));
      for (int i = 0; i < d; ++i) std::swap(a(i, k + 1), a(i, pivot));
      pf = -pf;
    }
    const Rational pivot_value = a(k, k + 1);
    pf *= pivot_value;
    const Rational inv_pivot = 1 / pivot_value;
    for (int i = k + 2; i < d; ++i) {
      const Rational& ki = a(k, i);
      const Rational& k1i = a(k + 1, i);
      if (ki.is_zero() && k1i.is_zero()) continue;
      for (int j = i + 1; j < d; ++j) {
        const Rational& kj = a(k, j);
        const Rational& k1j = a(k + 1, j);
        if (kj.is_zero() && k1j.is_zero()) continue;
        const Rational delta = (k1i * kj - ki * k1j) * inv_pivot;
        if (delta.is_zero()) continue;
        a(i, j) += delta;
        a(j, i) = -a(i, j);
      }
    }
  }
  return pf;
}

inline SkewMatrix Invert(const SkewMatrix& m) {
  Matrix inv = Invert(m.dense());
  return SkewMatrix::FromDense(inv, m.labels());
}

// Principal submatrix on the labels not in `removed`.
inline SkewMatrix DeleteVertices(const SkewMatrix& m,
                                 const std::vector<VertexCoord>& removed) {
  if (!m.has_labels() && !removed.empty()) {
    throw Error(ErrorCode::kUnknownVertex, "matrix carries no vertex labels");
  }
  std::set<int> drop;
  for (const auto& v : removed) {
    auto index = m.FindLabel(v);
    if (!index) {
      throw Error(ErrorCode::kUnknownVertex,
                  "vertex " + v.ToString() + " is not a label of the matrix");
    }
    drop.insert(*index);
  }
  std::vector<int> keep;
  for (int i = 0; i < m.dim(); ++i) {
    if (!drop.count(i)) keep.push_back(i);
  }
  SkewMatrix sub(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      sub.Set(static_cast<int>(i), static_cast<int>(j), m(keep[i], keep[j]));
    }
  }
  if (m.has_labels()) {
    std::vector<VertexCoord> labels;
    for (int i : keep) labels.push_back(m.labels()[i]);
    sub.SetLabels(std::move(labels));
  }
  return sub;
}

}  // namespace tsscpp

#endif  // TSSCPP_LINALG_HPP_
