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

// Exact closed-form evaluation of the inverse Kasteleyn matrix of G_n.
//
// The formulas are stated with contour integrals around the origin. Every
// such integral is a residue of (1 + r)^m over a power of r, possibly with
// one factor 1 / (1 - r), so it collapses to a binomial coefficient or a
// partial row sum of binomials. The double integral in the kernel variables
// reduces to +1, -1 or 0. What remains is a finite rational sum.

#ifndef TSSCPP_CLOSED_FORM_HPP_
#define TSSCPP_CLOSED_FORM_HPP_

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tsscpp/error.hpp"
#include "tsscpp/graph.hpp"
#include "tsscpp/linalg.hpp"
#include "tsscpp/rational.hpp"

namespace tsscpp {

inline BigInt Factorial(long m) {
  if (m < 0) throw Error(ErrorCode::kInvalidParameter, "factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

// binom(a, b) for any integer a: zero when b < 0, else the falling factorial
// a (a - 1) ... (a - b + 1) / b!.
inline BigInt Binomial(long a, long b) {
  if (b < 0) return 0;
  BigInt r;
  BigInt top(a);
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(b));
  return r;
}

inline BigInt Catalan(long m) {
  if (m < 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "Catalan index must be >= 0, got " + std::to_string(m));
  }
  return Binomial(2 * m, m) / (m + 1);
}

// Number of m x m alternating sign matrices, prod_{i<m} (3i+1)! / (m+i)!.
inline BigInt AsmNumber(long m) {
  if (m < 1) {
    throw Error(ErrorCode::kInvalidParameter,
                "ASM order must be >= 1, got " + std::to_string(m));
  }
  mpq_class product = 1;
  for (long i = 0; i < m; ++i) {
    product *= mpq_class(Factorial(3 * i + 1), Factorial(m + i));
  }
  product.canonicalize();
  if (product.get_den() != 1) throw Error(ErrorCode::kInternal, "non-integral ASM count");
  return product.get_num();
}

// The coefficient p(n, k, l), defined for 0 <= l <= k <= n.
inline Rational PCoeff(int n, int k, int l) {
  if (n < 0 || l < 0 || l > k || k > n) {
    throw Error(ErrorCode::kInvalidParameter,
                "p(n,k,l) needs 0 <= l <= k <= n, got (" + std::to_string(n) + "," +
                    std::to_string(k) + "," + std::to_string(l) + ")");
  }
  const BigInt numerator = Factorial(n + k - 2 * l + 1) * Factorial(2 * n - k - l + 1);
  const BigInt denominator = Factorial(k - l) * Factorial(3 * n - k + 2 - 2 * l);
  return Rational(numerator, denominator) *
         Rational(BigInt(SignPower(k) * (3 * n - 3 * k + 2)) * Catalan(n - k));
}

// [m]_2, the residue of m modulo 2 in {0, 1}.
inline int Mod2(long m) { return static_cast<int>(((m % 2) + 2) % 2); }

// Residue of (1 + r)^m / ((1 - r) r^(top + 1)): sum_{j=0}^{top} binom(m, j).
inline BigInt PartialBinomialSum(long m, long top) {
  BigInt sum = 0;
  for (long j = 0; j <= top; ++j) sum += Binomial(m, j);
  return sum;
}

// Residue of the r-factor in the h- and t-formulas. `pure_pole` selects
// (1 + r)^(n-k) / r^(i-2k+1); otherwise (1 + r)^(n-k) / ((1 - r) r^(i-2k)).
inline BigInt RFactor(int n, bool pure_pole, int k, int i) {
  if (pure_pole) return Binomial(n - k, i - 2 * k);
  return PartialBinomialSum(n - k, i - 2 * k - 1);
}

// Residue of (s1 - s2) / ((s1 s2 - 1) s1^(first+1) s2^(second+1)).
inline int SKernel(int first, int second) {
  if (first < 0 || second < 0) {
    throw Error(ErrorCode::kInvalidParameter, "kernel exponents must be >= 0");
  }
  if (second == first + 1) return 1;
  if (first == second + 1) return -1;
  return 0;
}

inline Rational H0b(int n, int i) {
  if (n < 1 || i < 0) throw Error(ErrorCode::kInvalidParameter, "h0b needs n >= 1, i >= 0");
  Rational sum = -Mod2(i + 1);
  for (int k = 0; k <= n; ++k) {
    const BigInt r = RFactor(n, false, k, i);
    if (r != 0) sum += PCoeff(n, k, 0) * Rational(r);
  }
  return sum;
}

inline Rational H1b(int n, int i) {
  if (n < 1 || i < 0) throw Error(ErrorCode::kInvalidParameter, "h1b needs n >= 1, i >= 0");
  Rational sum = 0;
  for (int k = 0; k <= n; ++k) {
    const BigInt r = RFactor(n, true, k, i);
    if (r != 0) sum += PCoeff(n, k, 0) * Rational(r);
  }
  return sum;
}

// Decomposition of x = (i1, i1 + 2 i2 + eps) used to pick a formula.
struct VertexDecomposition {
  int i1 = 0;
  int i2 = 0;
  int eps = 0;

  static VertexDecomposition Of(const VertexCoord& v) {
    const int offset = v.x2 - v.x1;
    return {v.x1, offset / 2, offset % 2};
  }
};

struct InverseEntryQuery {
  int n = 0;
  VertexCoord x;
  VertexCoord y;
  VertexDecomposition dx;
  VertexDecomposition dy;
  // Both columns lie in 0..2n-1 and each i2 respects its upper bound.
  bool in_stated_range = false;

  static InverseEntryQuery Make(int n, const VertexCoord& x, const VertexCoord& y) {
    for (const auto& v : {x, y}) {
      if (!InVertexSet(n, v)) {
        throw Error(ErrorCode::kUnknownVertex,
                    "vertex " + v.ToString() + " is not in G_" + std::to_string(n));
      }
    }
    InverseEntryQuery q{n, x, y, VertexDecomposition::Of(x), VertexDecomposition::Of(y)};
    auto row_ok = [n](const VertexDecomposition& d) {
      return d.i1 <= 2 * n - 1 && d.i2 <= n - (d.i1 + d.eps) / 2;
    };
    q.in_stated_range = row_ok(q.dx) && row_ok(q.dy);
    return q;
  }
};

// Closed-form inverse Kasteleyn matrix of G_n with memoized building blocks.
// Instances cache lazily and are not safe to share across threads.
class ClosedFormInverse {
 public:
  explicit ClosedFormInverse(int n) : n_(n), b_(BVertex(n)) {
    p_.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= k; ++l) p_[k].push_back(PCoeff(n, k, l));
    }
  }

  int n() const { return n_; }
  const Rational& P(int k, int l) const { return p_.at(k).at(l); }

  const Rational& H0b(int i) const { return Memo(h0_, i, [&] { return tsscpp::H0b(n_, i); }); }
  const Rational& H1b(int i) const { return Memo(h1_, i, [&] { return tsscpp::H1b(n_, i); }); }

  // The four t-functions, selected by (first_pure, second_pure) in {0,1}^2,
  // where 1 means the r-factor is a pure pole.
  const Rational& T(int first_pure, int second_pure, int i, int j) const {
    const auto key = std::make_tuple(first_pure, second_pure, i, j);
    auto it = t_.find(key);
    if (it != t_.end()) return it->second;
    return t_.emplace(key, ComputeT(first_pure, second_pure, i, j)).first->second;
  }

  // K^{-1}(x, b).
  Rational EntryB(const VertexCoord& x) const {
    if (!InVertexSet(n_, x)) {
      throw Error(ErrorCode::kUnknownVertex,
                  "vertex " + x.ToString() + " is not in G_" + std::to_string(n_));
    }
    if (x == b_) return 0;
    if (x.x1 == 2 * n_ && x.x2 == 2 * n_) return RowOfBLeaf(b_);
    const auto d = VertexDecomposition::Of(x);
    Rational sum = 0;
    if (d.eps == 1) {
      for (int l = 0; l <= d.i1; ++l) {
        const BigInt c = Binomial(d.i2 - 1 + l, l);
        if (c != 0) sum += Rational(SignPower(d.i2 + l) * c) * H1b(d.i1 - l);
      }
    } else {
      for (int l = 0; l <= d.i2; ++l) {
        sum += Rational(SignPower(d.i2) * Binomial(d.i2, l)) * H0b(d.i1 + l);
      }
    }
    return sum;
  }

  // K^{-1}(x, y) for any two vertices of G_n.
  Rational Entry(const VertexCoord& x, const VertexCoord& y) const {
    const auto q = InverseEntryQuery::Make(n_, x, y);
    if (x == y) return 0;
    if (y == b_) return EntryB(x);
    if (x == b_) return -EntryB(y);
    // For even n the vertex (2n, 2n) is the only neighbour of b, so the row
    // of K K^{-1} = I at b pins its row of the inverse.
    if (x.x1 == 2 * n_ && x.x2 == 2 * n_) return RowOfBLeaf(y);
    if (y.x1 == 2 * n_ && y.x2 == 2 * n_) return -RowOfBLeaf(x);
    const auto& dx = q.dx;
    const auto& dy = q.dy;
    if (dx.eps == 0 && dy.eps == 1) return -Entry(y, x);
    Rational sum = 0;
    if (dx.eps == 1 && dy.eps == 1) {
      for (int l1 = 0; l1 <= dx.i1; ++l1) {
        const BigInt c1 = Binomial(dx.i2 - 1 + l1, l1);
        if (c1 == 0) continue;
        for (int l2 = 0; l2 <= dy.i1; ++l2) {
          const BigInt c2 = Binomial(dy.i2 - 1 + l2, l2);
          if (c2 == 0) continue;
          sum += Rational(SignPower(dx.i2 + dy.i2 + l1 + l2) * c1 * c2) *
                 T(1, 1, dx.i1 - l1, dy.i1 - l2);
        }
      }
      return sum;
    }
    if (dx.eps == 0 && dy.eps == 0) {
      for (int l1 = 0; l1 <= dx.i2; ++l1) {
        for (int l2 = 0; l2 <= dy.i2; ++l2) {
          sum += Rational(SignPower(dx.i2 + dy.i2) * Binomial(dx.i2, l1) *
                          Binomial(dy.i2, l2)) *
                 T(0, 0, dx.i1 + l1, dy.i1 + l2);
        }
      }
      return sum;
    }
    // eps = (1, 0).
    for (int l1 = 0; l1 <= dx.i1; ++l1) {
      const BigInt c1 = Binomial(dx.i2 - 1 + l1, l1);
      if (c1 == 0) continue;
      for (int l2 = 0; l2 <= dy.i2; ++l2) {
        sum += Rational(SignPower(dx.i2 + dy.i2 + l1) * c1 * Binomial(dy.i2, l2)) *
               T(1, 0, dx.i1 - l1, dy.i1 + l2);
      }
    }
    if (x.x1 >= y.x1 && x.x1 + x.x2 < y.x1 + y.x2) {
      sum -= Rational(SignPower(dx.i2 + dy.i2) *
                      Binomial(dy.i2 - dx.i2 - 1, dx.i1 - dy.i1));
    }
    return sum;
  }

  // The full inverse in the lexicographic vertex order of G_n.
  Matrix FullInverse() const {
    const auto graph = TsscppGraph::Build(n_);
    const int d = graph.num_vertices();
    Matrix m(d);
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        m(i, j) = Entry(graph.vertex(i), graph.vertex(j));
        m(j, i) = -m(i, j);
      }
    }
    return m;
  }

 private:
  template <typename F>
  static const Rational& Memo(std::map<int, Rational>& cache, int key, F&& compute) {
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, compute()).first->second;
  }

  // K^{-1}((2n, 2n), y) for even n: 1_{y = b} / K(b, (2n, 2n)), and
  // K(b, (2n, 2n)) = -1.
  Rational RowOfBLeaf(const VertexCoord& y) const {
    if (n_ % 2 == 1) throw Error(ErrorCode::kInternal, "(2n,2n) is b for odd n");
    return y == b_ ? Rational(-1) : Rational(0);
  }

  Rational ComputeT(int first_pure, int second_pure, int i, int j) const {
    if (i < 0 || j < 0) {
      throw Error(ErrorCode::kInvalidParameter, "t-function arguments must be >= 0");
    }
    Rational sum = 0;
    for (int k1 = 0; k1 <= n_; ++k1) {
      const BigInt r1 = RFactor(n_, first_pure == 1, k1, i);
      if (r1 == 0) continue;
      for (int k2 = 0; k2 <= n_; ++k2) {
        const BigInt r2 = RFactor(n_, second_pure == 1, k2, j);
        if (r2 == 0) continue;
        Rational inner = 0;
        for (int l1 = 0; l1 <= k1; ++l1) {
          // The kernel vanishes unless |l1 - l2| = 1.
          for (int l2 : {l1 - 1, l1 + 1}) {
            if (l2 < 0 || l2 > k2) continue;
            inner += SKernel(l1, l2) * (P(k1, l1) * P(k2, l2));
          }
        }
        sum += inner * Rational(r1 * r2);
      }
    }
    if (first_pure == 0 && second_pure == 0) {
      if (i < j) sum += Mod2(i + 1) * Mod2(j);
      if (i > j) sum -= Mod2(i) * Mod2(j + 1);
      sum += Mod2(j + 1) * H0b(i) - Mod2(i + 1) * H0b(j);
    } else if (first_pure == 1 && second_pure == 0) {
      sum += Mod2(j + 1) * H1b(i);
    } else if (first_pure == 0 && second_pure == 1) {
      sum -= Mod2(i + 1) * H1b(j);
    }
    return sum;
  }

  int n_;
  VertexCoord b_;
  std::vector<std::vector<Rational>> p_;
  mutable std::map<int, Rational> h0_;
  mutable std::map<int, Rational> h1_;
  mutable std::map<std::tuple<int, int, int, int>, Rational> t_;
};

inline Rational TFn(int n, int first_pure, int second_pure, int i, int j) {
  if ((first_pure != 0 && first_pure != 1) || (second_pure != 0 && second_pure != 1)) {
    throw Error(ErrorCode::kInvalidParameter, "t-function selectors must be 0 or 1");
  }
  return ClosedFormInverse(n).T(first_pure, second_pure, i, j);
}

inline Rational KinvB(int n, const VertexCoord& x) {
  return ClosedFormInverse(n).EntryB(x);
}

inline Rational Kinv(int n, const VertexCoord& x, const VertexCoord& y) {
  return ClosedFormInverse(n).Entry(x, y);
}

}  // namespace tsscpp

#endif  // TSSCPP_CLOSED_FORM_HPP_
