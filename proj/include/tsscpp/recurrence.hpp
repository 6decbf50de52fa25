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

// Boundary quantities of G_n and the recurrences relating consecutive n.
//
// Every table has two routes: a direct evaluation (closed form or Pfaffian
// ratios) and a recurrence in n that starts from the smallest case. The
// routes are independent and are expected to agree exactly.
//
// Notation used below, with Z_G the number of perfect matchings of G and
// Z_n^U that of G_n with the vertex set U removed:
//   T_n(i)      = Z_n^{(2i,2n+1), b} / Z_n                     0 <= i < n
//   R_n(i, j)   = K^{-1}((2i, 2n+1), (2j, 2n+1))              0 <= i, j < n
//   g_n^b(j)    = Z_n^{(j,j), b} / Z_n                         0 <= j <= 2n
//   g_n(i, j)   = Z_n^{(i,i), (j,j)} / Z_n, antisymmetric      0 <= i, j < 2n

#ifndef TSSCPP_RECURRENCE_HPP_
#define TSSCPP_RECURRENCE_HPP_

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsscpp/closed_form.hpp"
#include "tsscpp/error.hpp"
#include "tsscpp/graph.hpp"
#include "tsscpp/linalg.hpp"
#include "tsscpp/rational.hpp"

namespace tsscpp {

enum class TableMethod { kClosedForm, kRecurrence };

inline std::string_view TableMethodName(TableMethod m) {
  return m == TableMethod::kClosedForm ? "closed-form" : "recurrence";
}

using RationalGrid = std::vector<std::vector<Rational>>;

// Z_{n-1} / Z_n from the alternating sign matrix numbers.
inline Rational ZRatio(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidParameter, "n must be >= 1");
  return Rational(AsmNumber(n), AsmNumber(n + 1));
}

// Number of perfect matchings of G_n minus `removed`, as |Pf| of the
// principal submatrix of the Kasteleyn matrix.
inline Rational PartitionFunction(const SkewMatrix& kasteleyn,
                                  const std::vector<VertexCoord>& removed = {}) {
  return Pfaffian(DeleteVertices(kasteleyn, removed)).abs();
}

inline void RequireOrder(int n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidParameter,
                "order n must be >= 1, got " + std::to_string(n));
  }
}

// T_n(i) = (-1)^i p(n, i, 0).
inline std::vector<Rational> TTable(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidParameter, "n must be >= 0");
  std::vector<Rational> t;
  for (int i = 0; i < n; ++i) t.push_back(SignPower(i) * PCoeff(n, i, 0));
  return t;
}

inline std::vector<Rational> TTableFromPfaffians(int n) {
  RequireOrder(n);
  const auto k = KasteleynMatrix(TsscppGraph::Build(n));
  const Rational z = PartitionFunction(k);
  std::vector<Rational> t;
  for (int i = 0; i < n; ++i) {
    t.push_back(PartitionFunction(k, {{2 * i, 2 * n + 1}, BVertex(n)}) / z);
  }
  return t;
}

// R_n by the condensation recurrence
//   R_n(i, j) = R_{n-1}(i-1, j-1) + T_n(i) T_{n-1}(j-1) - T_{n-1}(i-1) T_n(j),
// seeded on the first row by R_n(0, j) = (Z_{n-1}/Z_n) T_{n-1}(j-1).
inline RationalGrid RTableByRecurrence(int n) {
  RequireOrder(n);
  RationalGrid previous;
  RationalGrid current;
  std::vector<Rational> t_previous = TTable(0);
  for (int m = 1; m <= n; ++m) {
    const auto t_current = TTable(m);
    const Rational z = ZRatio(m);
    current.assign(m, std::vector<Rational>(m));
    for (int j = 1; j < m; ++j) {
      current[0][j] = z * t_previous[j - 1];
      current[j][0] = -current[0][j];
    }
    for (int i = 1; i < m; ++i) {
      for (int j = 1; j < m; ++j) {
        current[i][j] = previous[i - 1][j - 1] + t_current[i] * t_previous[j - 1] -
                        t_previous[i - 1] * t_current[j];
      }
    }
    previous = current;
    t_previous = t_current;
  }
  return current;
}

inline RationalGrid RTable(int n, TableMethod method) {
  if (method == TableMethod::kRecurrence) return RTableByRecurrence(n);
  RequireOrder(n);
  const ClosedFormInverse inverse(n);
  RationalGrid r(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      r[i][j] = inverse.Entry({2 * i, 2 * n + 1}, {2 * j, 2 * n + 1});
    }
  }
  return r;
}

struct DiagonalTables {
  std::vector<Rational> gb;  // g_n^b(j), 0 <= j <= 2n
  RationalGrid gdiag;        // g_n(i, j), 0 <= i, j <= 2n - 1
};

// g_n^b and g_n read off the closed-form inverse. The sign pattern of the
// diagonal block is K^{-1}((i,i),(j,j)) = (-1)^{i+j+1} g_n(i, j).
inline DiagonalTables DiagonalTablesClosedForm(int n) {
  RequireOrder(n);
  const ClosedFormInverse inverse(n);
  DiagonalTables out;
  for (int j = 0; j <= 2 * n; ++j) {
    out.gb.push_back(SignPower(j + 1) * inverse.EntryB({j, j}));
  }
  out.gdiag.assign(2 * n, std::vector<Rational>(2 * n));
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = i + 1; j < 2 * n; ++j) {
      out.gdiag[i][j] = SignPower(i + j + 1) * inverse.Entry({i, i}, {j, j});
      out.gdiag[j][i] = -out.gdiag[i][j];
    }
  }
  return out;
}

// Both boundary recurrences, run upward from G_0 (where g_0^b = (1)).
inline DiagonalTables DiagonalTablesByRecurrence(int n) {
  RequireOrder(n);
  DiagonalTables prev{{Rational(1)}, {}};
  DiagonalTables cur;
  for (int m = 1; m <= n; ++m) {
    const Rational z = ZRatio(m);
    cur.gb.assign(2 * m + 1, Rational(0));
    cur.gb[0] = 1;
    cur.gb[1] = z;
    for (int j = 2; j <= 2 * m - 1; ++j) {
      Rational correction = 0;
      for (int r = 0; r <= m - 1; ++r) {
        if (r >= 2 * (m - 1) || j - 2 >= 2 * (m - 1)) continue;
        correction += Rational(SignPower(r) * Binomial(m + 1, r + 2)) * prev.gdiag[r][j - 2];
      }
      cur.gb[j] = z * (1 - prev.gb[j - 2] + correction);
    }
    // (2m, 2m) is matched to the leaf b for even m and is b itself for odd m.
    cur.gb[2 * m] = (m % 2 == 0) ? 1 : 0;

    cur.gdiag.assign(2 * m, std::vector<Rational>(2 * m));
    for (int i = 0; i < 2 * m; ++i) {
      for (int j = i + 1; j < 2 * m; ++j) {
        Rational v;
        if (i == 0) {
          v = 1 - cur.gb[j];
        } else if (i == 1) {
          v = z * prev.gb[j - 2];
        } else {
          v = prev.gdiag[i - 2][j - 2] - cur.gb[j] * prev.gb[i - 2] +
              cur.gb[i] * prev.gb[j - 2];
        }
        cur.gdiag[i][j] = v;
        cur.gdiag[j][i] = -v;
      }
    }
    prev = cur;
  }
  return cur;
}

inline std::vector<Rational> GbTable(int n, TableMethod method) {
  return method == TableMethod::kClosedForm ? DiagonalTablesClosedForm(n).gb
                                            : DiagonalTablesByRecurrence(n).gb;
}

inline RationalGrid GdiagTable(int n, TableMethod method) {
  return method == TableMethod::kClosedForm ? DiagonalTablesClosedForm(n).gdiag
                                            : DiagonalTablesByRecurrence(n).gdiag;
}

// sum_{j=0}^{2n} g_n^b(j) from the closed form.
inline Rational SumRule(int n) {
  Rational sum = 0;
  for (const auto& g : GbTable(n, TableMethod::kClosedForm)) sum += g;
  return sum;
}

// n + 1 for even n, n + 1/2 for odd n.
inline Rational SumRuleExpected(int n) {
  return n % 2 == 0 ? Rational(n + 1) : Rational(2 * n + 1, 2);
}

struct BoundaryTables {
  int n = 0;
  TableMethod method = TableMethod::kClosedForm;
  Rational z_ratio;
  std::vector<Rational> t;
  RationalGrid r;
  std::vector<Rational> gb;
  RationalGrid gdiag;
};

inline BoundaryTables BuildBoundaryTables(int n, TableMethod method) {
  BoundaryTables out;
  out.n = n;
  out.method = method;
  out.z_ratio = ZRatio(n);
  out.t = TTable(n);
  out.r = RTable(n, method);
  auto diag = method == TableMethod::kClosedForm ? DiagonalTablesClosedForm(n)
                                                 : DiagonalTablesByRecurrence(n);
  out.gb = std::move(diag.gb);
  out.gdiag = std::move(diag.gdiag);
  return out;
}

// CSV rows "table,i,j,value,method"; one-index tables leave j empty.
inline std::string BoundaryTablesCsv(const BoundaryTables& tables) {
  std::ostringstream out;
  const auto method = TableMethodName(tables.method);
  out << "table,i,j,value,method\n";
  out << "z_ratio,,," << tables.z_ratio << "," << method << "\n";
  for (std::size_t i = 0; i < tables.t.size(); ++i) {
    out << "T," << i << ",," << tables.t[i] << "," << method << "\n";
  }
  for (std::size_t i = 0; i < tables.r.size(); ++i) {
    for (std::size_t j = 0; j < tables.r[i].size(); ++j) {
      out << "R," << i << "," << j << "," << tables.r[i][j] << "," << method << "\n";
    }
  }
  for (std::size_t j = 0; j < tables.gb.size(); ++j) {
    out << "gb," << j << ",," << tables.gb[j] << "," << method << "\n";
  }
  for (std::size_t i = 0; i < tables.gdiag.size(); ++i) {
    for (std::size_t j = 0; j < tables.gdiag[i].size(); ++j) {
      out << "gdiag," << i << "," << j << "," << tables.gdiag[i][j] << "," << method << "\n";
    }
  }
  return out.str();
}

// Distinct vertices of the outer face in counter-clockwise order of first
// appearance on the boundary walk.
inline std::vector<int> OuterFaceVertices(const TsscppGraph& graph) {
  std::vector<int> order;
  std::set<int> seen;
  for (int v : graph.outer_face().cycle) {
    if (seen.insert(v).second) order.push_back(v);
  }
  return order;
}

namespace internal {

// True when a, b, c, d occur in this cyclic order (either direction) along
// the boundary walk of some face.
inline bool OnCommonFaceInOrder(const TsscppGraph& graph, const std::vector<int>& quad) {
  std::vector<const Face*> faces;
  for (const auto& f : graph.faces()) faces.push_back(&f);
  faces.push_back(&graph.outer_face());
  for (const Face* f : faces) {
    std::vector<int> pos;
    for (int v : quad) {
      auto it = std::find(f->cycle.begin(), f->cycle.end(), v);
      if (it == f->cycle.end()) break;
      pos.push_back(static_cast<int>(it - f->cycle.begin()));
    }
    if (pos.size() != 4) continue;
    auto cyclic = [](const std::vector<int>& p) {
      int descents = 0;
      for (int t = 0; t < 4; ++t) descents += p[(t + 1) % 4] < p[t];
      return descents == 1;
    };
    std::vector<int> reversed(pos.rbegin(), pos.rend());
    if (cyclic(pos) || cyclic(reversed)) return true;
  }
  return false;
}

}  // namespace internal

// Graphical condensation for four vertices a, b, c, d in cyclic order on a
// face:  Z Z^{abcd} + Z^{ac} Z^{bd} = Z^{ab} Z^{cd} + Z^{ad} Z^{bc}.
// `cache` memoizes partition functions by removed index set.
inline bool CheckCondensation(const TsscppGraph& graph, const SkewMatrix& kasteleyn,
                              const VertexCoord& a, const VertexCoord& b,
                              const VertexCoord& c, const VertexCoord& d,
                              std::map<std::vector<int>, Rational>* cache = nullptr) {
  const std::vector<VertexCoord> coords = {a, b, c, d};
  std::vector<int> quad;
  for (const auto& v : coords) quad.push_back(graph.IndexOf(v));
  if (std::set<int>(quad.begin(), quad.end()).size() != 4) {
    throw Error(ErrorCode::kInvalidParameter, "condensation needs four distinct vertices");
  }
  if (!internal::OnCommonFaceInOrder(graph, quad)) {
    throw Error(ErrorCode::kInvalidParameter,
                "vertices are not in cyclic order on a common face");
  }
  std::map<std::vector<int>, Rational> local;
  auto& memo = cache ? *cache : local;
  auto z = [&](std::vector<int> removed) {
    std::sort(removed.begin(), removed.end());
    auto it = memo.find(removed);
    if (it != memo.end()) return it->second;
    std::vector<VertexCoord> cs;
    for (int v : removed) cs.push_back(graph.vertex(v));
    const Rational value = PartitionFunction(kasteleyn, cs);
    memo.emplace(removed, value);
    return value;
  };
  const int ia = quad[0], ib = quad[1], ic = quad[2], id = quad[3];
  const Rational lhs = z({}) * z({ia, ib, ic, id}) + z({ia, ic}) * z({ib, id});
  const Rational rhs = z({ia, ib}) * z({ic, id}) + z({ia, id}) * z({ib, ic});
  return lhs == rhs;
}

struct PartitionRecurrenceReport {
  Rational z_n;
  Rational rhs;
  bool holds = false;
};

// Z_n = Z_{n-1} + sum_{k=0}^{n-1} (n - k) Z_{n-1}^{b, (0, 2k)}.
inline PartitionRecurrenceReport CheckPartitionRecurrence(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidParameter, "partition recurrence needs n >= 2");
  const auto k_n = KasteleynMatrix(TsscppGraph::Build(n));
  const auto k_prev = KasteleynMatrix(TsscppGraph::Build(n - 1));
  PartitionRecurrenceReport report;
  report.z_n = PartitionFunction(k_n);
  report.rhs = PartitionFunction(k_prev);
  for (int k = 0; k <= n - 1; ++k) {
    report.rhs += (n - k) * PartitionFunction(k_prev, {BVertex(n - 1), {0, 2 * k}});
  }
  report.holds = report.z_n == report.rhs;
  return report;
}

// The variant removing {(0,0), (0,2k+1)} instead; it does not balance.
inline PartitionRecurrenceReport PartitionRecurrenceWithCornerPairs(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidParameter, "partition recurrence needs n >= 2");
  const auto k_n = KasteleynMatrix(TsscppGraph::Build(n));
  const auto k_prev = KasteleynMatrix(TsscppGraph::Build(n - 1));
  PartitionRecurrenceReport report;
  report.z_n = PartitionFunction(k_n);
  report.rhs = PartitionFunction(k_prev);
  for (int k = 0; k <= n - 1; ++k) {
    report.rhs += (n - k) * PartitionFunction(k_prev, {{0, 0}, {0, 2 * k + 1}});
  }
  report.holds = report.z_n == report.rhs;
  return report;
}

}  // namespace tsscpp

#endif  // TSSCPP_RECURRENCE_HPP_
