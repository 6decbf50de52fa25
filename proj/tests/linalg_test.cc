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

#include "tsscpp/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tsscpp/error.hpp"
#include "tsscpp/graph.hpp"

namespace tsscpp {
namespace {

using testing::ExpansionPfaffian;
using testing::LaplaceDeterminant;
using testing::RandomSkew;
using testing::ToSkew;

int PermutationSign(std::vector<int> p) {
  int sign = 1;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  }
  return sign;
}

TEST(PfaffianTest, TwoByTwo) {
  SkewMatrix m(2);
  m.Set(0, 1, Rational(BigInt(5), BigInt(3)));
  EXPECT_EQ(Pfaffian(m), Rational(BigInt(5), BigInt(3)));
}

TEST(PfaffianTest, EmptyMatrixHasUnitPfaffian) { EXPECT_EQ(Pfaffian(SkewMatrix(0)), Rational(1)); }

TEST(PfaffianTest, OddDimensionThrows) {
  try {
    Pfaffian(SkewMatrix(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidShape);
  }
}

TEST(PfaffianTest, MatchesRowExpansionOnRandomMatrices) {
  std::mt19937_64 rng(20260101);
  for (int d = 2; d <= 8; d += 2) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto a = RandomSkew(d, rng);
      EXPECT_EQ(Pfaffian(ToSkew(a)), ExpansionPfaffian(a)) << "d=" << d;
    }
  }
}

TEST(PfaffianTest, SquareEqualsDeterminant) {
  std::mt19937_64 rng(77);
  for (int d = 2; d <= 12; d += 2) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = RandomSkew(d, rng);
      const auto m = ToSkew(a);
      const Rational pf = Pfaffian(m);
      EXPECT_EQ(pf * pf, Determinant(m.dense())) << "d=" << d;
    }
  }
}

TEST(PfaffianTest, NeedsRowPivoting) {
  // Zero in the (0,1) slot forces a swap.
  std::vector<std::vector<Rational>> a(4, std::vector<Rational>(4));
  auto set = [&](int i, int j, int v) {
    a[i][j] = v;
    a[j][i] = -v;
  };
  set(0, 2, 1);
  set(1, 3, 2);
  set(2, 3, 5);
  EXPECT_EQ(Pfaffian(ToSkew(a)), ExpansionPfaffian(a));
  EXPECT_EQ(Pfaffian(ToSkew(a)), Rational(-2));
}

TEST(PfaffianTest, SingularGivesZero) {
  std::vector<std::vector<Rational>> a(4, std::vector<Rational>(4));
  a[0][1] = 1;
  a[1][0] = -1;
  EXPECT_EQ(Pfaffian(ToSkew(a)), Rational(0));
}

// Pf(P^T A P) = sign(P) Pf(A), so |Pf| does not depend on vertex order.
TEST(PfaffianTest, OrderingInvariance) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 3; ++n) {
    const auto k = KasteleynMatrix(TsscppGraph::Build(n));
    const Rational base = Pfaffian(k);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<int> order(k.dim());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const Rational permuted = Pfaffian(k.Permuted(order));
      EXPECT_EQ(permuted, PermutationSign(order) * base);
      EXPECT_EQ(permuted.abs(), base.abs());
    }
  }
}

TEST(KasteleynTest, DiagonalEdgeOrientation) {
  for (int n = 1; n <= 4; ++n) {
    const auto g = TsscppGraph::Build(n);
    const auto k = KasteleynMatrix(g);
    EXPECT_EQ(k(g.IndexOf({1, 1}), g.IndexOf({0, 0})), Rational(1));
    EXPECT_EQ(k(g.IndexOf({0, 0}), g.IndexOf({1, 1})), Rational(-1));
  }
}

TEST(KasteleynTest, SupportIsTheEdgeSet) {
  for (int n = 1; n <= 4; ++n) {
    const auto g = TsscppGraph::Build(n);
    const auto k = KasteleynMatrix(g);
    int nonzero = 0;
    for (int i = 0; i < k.dim(); ++i) {
      EXPECT_TRUE(k(i, i).is_zero());
      for (int j = 0; j < k.dim(); ++j) {
        if (k(i, j).is_zero()) continue;
        ++nonzero;
        EXPECT_TRUE(g.Adjacent(i, j));
        EXPECT_TRUE(k(i, j) == Rational(1) || k(i, j) == Rational(-1));
        EXPECT_EQ(k(i, j), -k(j, i));
      }
    }
    EXPECT_EQ(nonzero, 2 * static_cast<int>(g.edges().size()));
  }
}

TEST(KasteleynTest, PfaffianCountsMatchings) {
  const long expected[] = {2, 7, 42, 429, 7436, 218348, 10850216, 911835460};
  for (int n = 1; n <= 8; ++n) {
    const Rational pf = Pfaffian(KasteleynMatrix(TsscppGraph::Build(n))).abs();
    EXPECT_EQ(pf, Rational(expected[n - 1])) << n;
    EXPECT_EQ(pf, testing::ProductFormula(n + 1)) << n;
  }
}

TEST(KasteleynTest, OrientationIsOddOnEveryFace) {
  for (int n = 1; n <= 8; ++n) {
    const auto g = TsscppGraph::Build(n);
    const auto report = CheckOrientation(g, KasteleynMatrix(g));
    EXPECT_TRUE(report.ok) << n;
    EXPECT_EQ(report.ccw_counts.size(), g.faces().size());
  }
}

TEST(KasteleynTest, TriangleCountsOfSmallestGraph) {
  const auto g = TsscppGraph::Build(1);
  const auto report = CheckOrientation(g, KasteleynMatrix(g));
  for (std::size_t f = 0; f < g.faces().size(); ++f) {
    if (g.faces()[f].cycle.size() == 3) {
      EXPECT_TRUE(report.ccw_counts[f] == 1 || report.ccw_counts[f] == 3);
    }
  }
}

TEST(KasteleynTest, FlippedEdgeBreaksAdjacentFaces) {
  const auto g = TsscppGraph::Build(2);
  for (std::size_t e = 0; e < g.edges().size(); e += 5) {
    auto k = KasteleynMatrix(g);
    const auto& edge = g.edges()[e];
    k.Set(edge.u, edge.v, -k(edge.u, edge.v));
    const auto report = CheckOrientation(g, k);
    int bordering = 0;
    for (const auto& f : g.faces()) {
      for (std::size_t t = 0; t < f.cycle.size(); ++t) {
        const int a = f.cycle[t];
        const int c = f.cycle[(t + 1) % f.cycle.size()];
        if (std::min(a, c) == edge.u && std::max(a, c) == edge.v) ++bordering;
      }
    }
    EXPECT_FALSE(report.ok);
    EXPECT_EQ(static_cast<int>(report.violating_faces.size()), bordering);
    EXPECT_LE(bordering, 2);
  }
}

TEST(InverseTest, TwoByTwo) {
  SkewMatrix m(2);
  m.Set(0, 1, 1);
  const auto inv = Invert(m);
  EXPECT_EQ(inv(0, 1), Rational(-1));
  EXPECT_EQ(inv(1, 0), Rational(1));
}

TEST(InverseTest, KasteleynInverseIsSkewAndExact) {
  for (int n = 1; n <= 5; ++n) {
    const auto k = KasteleynMatrix(TsscppGraph::Build(n));
    const auto inv = Invert(k);
    EXPECT_EQ(k.dense() * inv.dense(), Matrix::Identity(k.dim())) << n;
    for (int i = 0; i < k.dim(); ++i) {
      for (int j = 0; j < k.dim(); ++j) ASSERT_EQ(inv(i, j), -inv(j, i));
    }
  }
}

TEST(InverseTest, CornerToDistinguishedVertex) {
  const auto g = TsscppGraph::Build(2);
  const auto inv = Invert(KasteleynMatrix(g));
  EXPECT_EQ(inv(g.IndexOf({0, 0}), g.IndexOf({4, 5})).abs(), Rational(1));
}

TEST(InverseTest, SingularThrows) {
  try {
    Invert(SkewMatrix(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularMatrix);
  }
}

TEST(DeterminantTest, MatchesLaplaceExpansion) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int d = 1; d <= 6; ++d) {
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
    Matrix m(d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) m(i, j) = a[i][j] = dist(rng);
    }
    EXPECT_EQ(Determinant(m), LaplaceDeterminant(a));
  }
}

TEST(SkewMatrixTest, FromDenseValidates) {
  Matrix m(2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  EXPECT_THROW(SkewMatrix::FromDense(m), Error);
  Matrix d(2);
  d(0, 0) = 1;
  EXPECT_THROW(SkewMatrix::FromDense(d), Error);
}

TEST(SkewMatrixTest, JsonExport) {
  const auto k = KasteleynMatrix(TsscppGraph::Build(1));
  const auto j = k.ToJson();
  EXPECT_EQ(j["dimension"], 8);
  EXPECT_EQ(j["labels"].size(), 8u);
  EXPECT_EQ(j["entries"][0][0], "0/1");
  const int a = 0, c = 4;  // (0,0) and (1,1)
  EXPECT_EQ(j["entries"][a][c], "-1/1");
}

TEST(DeleteVerticesTest, RatioAgainstFullCount) {
  const auto k = KasteleynMatrix(TsscppGraph::Build(2));
  const Rational full = Pfaffian(k).abs();
  const Rational reduced = Pfaffian(DeleteVertices(k, {{1, 1}, {4, 5}})).abs();
  EXPECT_EQ(reduced / full, Rational(BigInt(2), BigInt(7)));
}

TEST(DeleteVerticesTest, EmptyAndFullDeletion) {
  const auto g = TsscppGraph::Build(1);
  const auto k = KasteleynMatrix(g);
  EXPECT_EQ(DeleteVertices(k, {}), k);
  const auto none = DeleteVertices(k, g.vertices());
  EXPECT_EQ(none.dim(), 0);
  EXPECT_EQ(Pfaffian(none), Rational(1));
}

TEST(DeleteVerticesTest, UnknownLabelThrows) {
  const auto k = KasteleynMatrix(TsscppGraph::Build(1));
  try {
    DeleteVertices(k, {{9, 9}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownVertex);
  }
}

}  // namespace
}  // namespace tsscpp
