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

#include "tsscpp/recurrence.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tsscpp/error.hpp"
#include "tsscpp/graph.hpp"
#include "tsscpp/linalg.hpp"

namespace tsscpp {
namespace {

using testing::SubsetMatchingCounter;

Rational Frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

TEST(BoundaryTablesTest, TMatchesMatchingRatios) {
  for (int n = 1; n <= 4; ++n) {
    const auto g = TsscppGraph::Build(n);
    SubsetMatchingCounter count(g);
    const auto t = TTable(n);
    ASSERT_EQ(static_cast<int>(t.size()), n);
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(t[i], count.Ratio({{2 * i, 2 * n + 1}, g.b()})) << n << "," << i;
    }
    EXPECT_EQ(TTableFromPfaffians(n), t);
  }
  EXPECT_EQ(TTable(1)[0], Frac(1, 2));
}

TEST(BoundaryTablesTest, ZRatio) {
  EXPECT_EQ(ZRatio(1), Frac(1, 2));
  EXPECT_EQ(ZRatio(2), Frac(2, 7));
  for (int n = 2; n <= 4; ++n) {
    const auto g = TsscppGraph::Build(n);
    const auto h = TsscppGraph::Build(n - 1);
    EXPECT_EQ(ZRatio(n),
              Rational(SubsetMatchingCounter(h).Count(), SubsetMatchingCounter(g).Count()));
  }
}

TEST(BoundaryTablesTest, TopBoundaryRecurrenceMatchesExactInverse) {
  for (int n = 1; n <= 5; ++n) {
    const auto g = TsscppGraph::Build(n);
    const Matrix inv = Invert(KasteleynMatrix(g).dense());
    const auto by_rec = RTable(n, TableMethod::kRecurrence);
    const auto closed = RTable(n, TableMethod::kClosedForm);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Rational exact = inv(g.IndexOf({2 * i, 2 * n + 1}), g.IndexOf({2 * j, 2 * n + 1}));
        EXPECT_EQ(by_rec[i][j], exact) << n << ":" << i << "," << j;
        EXPECT_EQ(closed[i][j], exact);
      }
    }
  }
  EXPECT_EQ(RTable(2, TableMethod::kRecurrence)[0][1], Frac(1, 7));
}

TEST(BoundaryTablesTest, DiagonalTablesMatchMatchingRatios) {
  for (int n = 1; n <= 4; ++n) {
    const auto g = TsscppGraph::Build(n);
    SubsetMatchingCounter count(g);
    const auto by_rec = DiagonalTablesByRecurrence(n);
    const auto closed = DiagonalTablesClosedForm(n);
    ASSERT_EQ(static_cast<int>(by_rec.gb.size()), 2 * n + 1);
    for (int j = 0; j <= 2 * n; ++j) {
      const VertexCoord v{j, j};
      const Rational expected = v == g.b() ? Rational(0) : count.Ratio({v, g.b()});
      EXPECT_EQ(by_rec.gb[j], expected) << n << "," << j;
      EXPECT_EQ(closed.gb[j], expected) << n << "," << j;
    }
    for (int i = 0; i < 2 * n; ++i) {
      EXPECT_EQ(by_rec.gdiag[i][i], Rational(0));
      for (int j = i + 1; j < 2 * n; ++j) {
        const Rational expected = count.Ratio({{i, i}, {j, j}});
        EXPECT_EQ(by_rec.gdiag[i][j], expected) << n << ":" << i << "," << j;
        EXPECT_EQ(by_rec.gdiag[j][i], -expected);
        EXPECT_EQ(closed.gdiag[i][j], expected);
      }
    }
  }
}

TEST(BoundaryTablesTest, DiagonalRecurrenceAgreesFurther) {
  for (int n = 5; n <= 7; ++n) {
    EXPECT_EQ(GbTable(n, TableMethod::kRecurrence), GbTable(n, TableMethod::kClosedForm)) << n;
    EXPECT_EQ(GdiagTable(n, TableMethod::kRecurrence), GdiagTable(n, TableMethod::kClosedForm))
        << n;
  }
}

TEST(SumRuleTest, KnownValues) {
  const Rational expected[] = {Frac(3, 2), 3, Frac(7, 2), 5, Frac(11, 2), 7, Frac(15, 2), 9};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(SumRule(n), expected[n - 1]) << n;
    EXPECT_EQ(SumRuleExpected(n), expected[n - 1]);
  }
}

// The sum of g^b is the expected number of diagonal vertices matched away
// from b, read off directly from the matching ratios.
TEST(SumRuleTest, MatchesRatiosDirectly) {
  for (int n = 1; n <= 4; ++n) {
    const auto g = TsscppGraph::Build(n);
    SubsetMatchingCounter count(g);
    Rational sum = 0;
    for (int j = 0; j <= 2 * n; ++j) {
      if (VertexCoord{j, j} != g.b()) sum += count.Ratio({{j, j}, g.b()});
    }
    EXPECT_EQ(sum, SumRuleExpected(n)) << n;
  }
}

TEST(PartitionRecurrenceTest, CorrectedFormHolds) {
  for (int n = 2; n <= 5; ++n) {
    const auto report = CheckPartitionRecurrence(n);
    EXPECT_TRUE(report.holds) << n;
    EXPECT_EQ(report.z_n, Rational(AsmNumber(n + 1)));
  }
  EXPECT_THROW(CheckPartitionRecurrence(1), Error);
}

TEST(PartitionRecurrenceTest, CornerPairVariantFails) {
  const auto report = PartitionRecurrenceWithCornerPairs(2);
  EXPECT_EQ(report.z_n, Rational(7));
  EXPECT_EQ(report.rhs, Rational(5));
  EXPECT_FALSE(report.holds);
}

TEST(CondensationTest, OuterFaceQuadruples) {
  const auto g = TsscppGraph::Build(2);
  const auto k = KasteleynMatrix(g);
  const auto outer = OuterFaceVertices(g);
  ASSERT_GE(outer.size(), 4u);
  std::map<std::vector<int>, Rational> cache;
  int checked = 0;
  for (std::size_t a = 0; a < outer.size(); ++a) {
    for (std::size_t b = a + 1; b < outer.size(); ++b) {
      for (std::size_t c = b + 1; c < outer.size(); ++c) {
        for (std::size_t d = c + 1; d < outer.size(); ++d) {
          EXPECT_TRUE(CheckCondensation(g, k, g.vertex(outer[a]), g.vertex(outer[b]),
                                        g.vertex(outer[c]), g.vertex(outer[d]), &cache));
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(CondensationTest, InvalidQuadruplesThrow) {
  const auto g = TsscppGraph::Build(2);
  const auto k = KasteleynMatrix(g);
  EXPECT_THROW(CheckCondensation(g, k, {0, 0}, {0, 0}, {0, 1}, {0, 2}), Error);
  // (2,2) is interior, so it shares no face with the three corners in order.
  EXPECT_THROW(CheckCondensation(g, k, {0, 0}, {2, 2}, {0, 5}, {4, 5}), Error);
  EXPECT_THROW(CheckCondensation(g, k, {0, 0}, {0, 1}, {0, 2}, {9, 9}), Error);
}

TEST(BoundaryTablesTest, CsvLayout) {
  const auto tables = BuildBoundaryTables(2, TableMethod::kRecurrence);
  const auto csv = BoundaryTablesCsv(tables);
  EXPECT_EQ(csv.rfind("table,i,j,value,method\n", 0), 0u);
  EXPECT_NE(csv.find("z_ratio,,,2/7,recurrence"), std::string::npos);
  EXPECT_EQ(tables.gb.size(), 5u);
  EXPECT_THROW(BuildBoundaryTables(0, TableMethod::kClosedForm), Error);
}

}  // namespace
}  // namespace tsscpp
