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

#include "tsscpp/statistics.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "tsscpp/error.hpp"
#include "tsscpp/graph.hpp"

namespace tsscpp {
namespace {

// Fraction of all perfect matchings containing every edge of `pairs`.
Rational EnumeratedProbability(const std::vector<Matching>& all,
                               const std::vector<std::pair<int, int>>& pairs) {
  long hits = 0;
  for (const auto& m : all) {
    bool ok = true;
    for (const auto& [a, b] : pairs) ok = ok && m.Contains(a, b);
    hits += ok;
  }
  return Rational(BigInt(hits), BigInt(static_cast<long>(all.size())));
}

EdgeQuery QueryOf(const TsscppGraph& g, const std::vector<const Edge*>& edges) {
  EdgeQuery q{g.n(), {}};
  for (const Edge* e : edges) q.edges.push_back({g.vertex(e->u), g.vertex(e->v)});
  return q;
}

const InverseSource kSources[] = {InverseSource::kClosedForm, InverseSource::kExactInverse};

TEST(SingleEdgeTest, MatchesEnumeration) {
  for (int n = 1; n <= 3; ++n) {
    const auto g = TsscppGraph::Build(n);
    const auto all = EnumerateMatchings(g);
    for (auto source : kSources) {
      const CorrelationKernel kernel(n, source);
      const auto field = kernel.MarginalField();
      for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& edge = g.edges()[e];
        const Rational expected = EnumeratedProbability(all, {{edge.u, edge.v}});
        EXPECT_EQ(field[e], expected) << "n=" << n << " edge " << e;
        EXPECT_EQ(kernel.EdgeProbability(QueryOf(g, {&edge})), expected);
        // Endpoint order does not matter.
        EdgeQuery swapped{n, {{g.vertex(edge.v), g.vertex(edge.u)}}};
        EXPECT_EQ(kernel.EdgeProbability(swapped), expected);
      }
    }
  }
}

TEST(EdgePairTest, MatchesEnumerationSmall) {
  for (int n = 1; n <= 2; ++n) {
    const auto g = TsscppGraph::Build(n);
    const auto all = EnumerateMatchings(g);
    for (auto source : kSources) {
      const CorrelationKernel kernel(n, source);
      for (const auto& a : g.edges()) {
        for (const auto& b : g.edges()) {
          if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
          EXPECT_EQ(kernel.EdgeProbability(QueryOf(g, {&a, &b})),
                    EnumeratedProbability(all, {{a.u, a.v}, {b.u, b.v}}));
        }
      }
    }
  }
}

TEST(EdgePairTest, RandomDisjointPairsAtOrderThree) {
  const auto g = TsscppGraph::Build(3);
  const auto all = EnumerateMatchings(g);
  const CorrelationKernel closed(3, InverseSource::kClosedForm);
  const CorrelationKernel exact(3, InverseSource::kExactInverse);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(g.edges().size()) - 1);
  int tested = 0;
  while (tested < 50) {
    const auto& a = g.edges()[pick(rng)];
    const auto& b = g.edges()[pick(rng)];
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
    const Rational expected = EnumeratedProbability(all, {{a.u, a.v}, {b.u, b.v}});
    EXPECT_EQ(closed.EdgeProbability(QueryOf(g, {&a, &b})), expected);
    EXPECT_EQ(exact.EdgeProbability(QueryOf(g, {&b, &a})), expected);
    ++tested;
  }
}

TEST(EdgeTripleTest, MatchesEnumeration) {
  const auto g = TsscppGraph::Build(2);
  const auto all = EnumerateMatchings(g);
  const CorrelationKernel kernel(2, InverseSource::kClosedForm);
  const auto& m = all.front();
  const auto pairs = m.Pairs();
  ASSERT_GE(pairs.size(), 3u);
  EdgeQuery q{2, {}};
  for (int t = 0; t < 3; ++t) q.edges.push_back({g.vertex(pairs[t].first), g.vertex(pairs[t].second)});
  EXPECT_EQ(kernel.EdgeProbability(q),
            EnumeratedProbability(all, {pairs[0], pairs[1], pairs[2]}));
  EXPECT_EQ(kernel.EdgeProbability(EdgeQuery{2, {}}), Rational(1));
}

TEST(MarginalFieldTest, VertexSumsAreOne) {
  for (int n = 1; n <= 5; ++n) {
    const auto g = TsscppGraph::Build(n);
    for (auto source : kSources) {
      for (const auto& s : VertexSums(g, MarginalField(n, source))) EXPECT_EQ(s, Rational(1)) << n;
    }
  }
}

TEST(MarginalFieldTest, SourcesAgreeAndBoundedInUnitInterval) {
  for (int n = 1; n <= 5; ++n) {
    const auto closed = MarginalField(n, InverseSource::kClosedForm);
    EXPECT_EQ(closed, MarginalField(n, InverseSource::kExactInverse)) << n;
    for (const auto& p : closed) {
      EXPECT_GE(p, Rational(0));
      EXPECT_LE(p, Rational(1));
    }
  }
}

TEST(MarginalFieldTest, CsvLayout) {
  const auto g = TsscppGraph::Build(1);
  const auto csv = MarginalFieldCsv(g, MarginalField(1, InverseSource::kClosedForm));
  EXPECT_EQ(csv.rfind("x1,x2,y1,y2,probability\n", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')),
            g.edges().size() + 1);
}

TEST(EdgeQueryTest, RejectsBadQueries) {
  const CorrelationKernel kernel(2, InverseSource::kExactInverse);
  auto code_of = [&](const EdgeQuery& q) {
    try {
      kernel.EdgeProbability(q);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  EXPECT_EQ(code_of({2, {{{0, 0}, {2, 2}}}}), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of({2, {{{0, 0}, {0, 1}}, {{0, 0}, {1, 1}}}}), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of({3, {{{0, 0}, {0, 1}}}}), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of({2, {{{7, 7}, {7, 8}}}}), ErrorCode::kInvalidParameter);
}

}  // namespace
}  // namespace tsscpp
