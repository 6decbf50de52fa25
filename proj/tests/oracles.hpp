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

// Independent reference computations shared by the test suites. Nothing
// here calls into the library's own algorithms.

#ifndef TSSCPP_TESTS_ORACLES_HPP_
#define TSSCPP_TESTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "tsscpp/graph.hpp"
#include "tsscpp/linalg.hpp"
#include "tsscpp/rational.hpp"

namespace tsscpp::testing {

// prod_{i=0}^{m-1} (3i+1)! / (m+i)!, with factorials built by repeated
// multiplication.
inline Rational ProductFormula(int m) {
  auto fact = [](int k) {
    BigInt f = 1;
    for (int t = 2; t <= k; ++t) f *= t;
    return f;
  };
  Rational a = 1;
  for (int i = 0; i < m; ++i) a *= Rational(fact(3 * i + 1), fact(m + i));
  return a;
}

// Pfaffian by expansion along the first row:
//   Pf(A) = sum_j (-1)^(j+1) a_{0j} Pf(A without rows/cols 0, j).
inline Rational ExpansionPfaffian(const std::vector<std::vector<Rational>>& a) {
  const int d = static_cast<int>(a.size());
  if (d == 0) return 1;
  if (d % 2 == 1) return 0;
  Rational total = 0;
  for (int j = 1; j < d; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<int> keep;
    for (int t = 1; t < d; ++t) {
      if (t != j) keep.push_back(t);
    }
    std::vector<std::vector<Rational>> minor(keep.size(), std::vector<Rational>(keep.size()));
    for (std::size_t r = 0; r < keep.size(); ++r) {
      for (std::size_t c = 0; c < keep.size(); ++c) minor[r][c] = a[keep[r]][keep[c]];
    }
    const Rational term = a[0][j] * ExpansionPfaffian(minor);
    if (j % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Determinant by Laplace expansion along the first row (small sizes only).
inline Rational LaplaceDeterminant(const std::vector<std::vector<Rational>>& a) {
  const int d = static_cast<int>(a.size());
  if (d == 0) return 1;
  Rational total = 0;
  for (int j = 0; j < d; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<Rational>> minor;
    for (int r = 1; r < d; ++r) {
      std::vector<Rational> row;
      for (int c = 0; c < d; ++c) {
        if (c != j) row.push_back(a[r][c]);
      }
      minor.push_back(row);
    }
    const Rational term = a[0][j] * LaplaceDeterminant(minor);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Random skew matrix with small rational entries; roughly a third zero.
inline std::vector<std::vector<Rational>> RandomSkew(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      a[i][j] = Rational(BigInt(num(rng)), BigInt(den(rng)));
      a[j][i] = -a[i][j];
    }
  }
  return a;
}

inline SkewMatrix ToSkew(const std::vector<std::vector<Rational>>& a) {
  const int d = static_cast<int>(a.size());
  Matrix m(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = a[i][j];
  }
  return SkewMatrix::FromDense(m);
}

// Number of perfect matchings of the graph with `removed` deleted. Matches
// the lowest remaining vertex to each remaining neighbour, memoized on the
// remaining vertex set (at most 64 vertices).
class SubsetMatchingCounter {
 public:
  explicit SubsetMatchingCounter(const TsscppGraph& graph) : graph_(graph) {}

  BigInt Count(const std::vector<VertexCoord>& removed = {}) {
    std::uint64_t mask = graph_.num_vertices() == 64 ? ~0ULL
                                                      : (1ULL << graph_.num_vertices()) - 1;
    for (const auto& v : removed) mask &= ~(1ULL << graph_.IndexOf(v));
    return Go(mask);
  }

  // Z^U / Z, the quantity tabulated by the boundary recurrences.
  Rational Ratio(const std::vector<VertexCoord>& removed) {
    return Rational(Count(removed), Count());
  }

 private:
  BigInt Go(std::uint64_t mask) {
    if (mask == 0) return 1;
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    const int v = __builtin_ctzll(mask);
    BigInt total = 0;
    for (int w : graph_.neighbors(v)) {
      if (mask >> w & 1ULL) total += Go(mask & ~(1ULL << v) & ~(1ULL << w));
    }
    memo_.emplace(mask, total);
    return total;
  }

  const TsscppGraph& graph_;
  std::unordered_map<std::uint64_t, BigInt> memo_;
};

}  // namespace tsscpp::testing

#endif  // TSSCPP_TESTS_ORACLES_HPP_
