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

// Residues at the origin computed by brute-force truncated power series.
// Nothing here uses a binomial formula, so these routines serve as an
// independent check on the closed-form reductions in closed_form.hpp.

#ifndef TSSCPP_SERIES_HPP_
#define TSSCPP_SERIES_HPP_

#include <string>
#include <vector>

#include "tsscpp/error.hpp"
#include "tsscpp/rational.hpp"

namespace tsscpp {

// Power series in one variable, kept modulo r^(order + 1).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(order + 1) {
    if (order < 0) throw Error(ErrorCode::kInternal, "negative truncation order");
  }

  static TruncatedSeries Constant(int order, const Rational& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(k); }
  Rational& operator[](int k) { return coeffs_.at(k); }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw Error(ErrorCode::kInternal, "order mismatch");
    TruncatedSeries c(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= a.order(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
  }

 private:
  std::vector<Rational> coeffs_;
};

// The integrand (1 + r)^binomial_power / ((1 - r)^geometric_power r^pole_order).
struct ResidueIntegrand {
  int binomial_power = 0;   // >= 0
  int geometric_power = 0;  // >= 0
  int pole_order = 0;       // any integer; <= 0 means no pole
};

// (1/2 pi i) times the contour integral around 0 of the integrand.
inline Rational ResidueOracle(const ResidueIntegrand& f) {
  if (f.binomial_power < 0 || f.geometric_power < 0) {
    throw Error(ErrorCode::kInvalidParameter, "series factors need non-negative powers");
  }
  if (f.pole_order <= 0) return 0;
  const int order = f.pole_order - 1;
  TruncatedSeries one_plus_r(order);
  one_plus_r[0] = 1;
  if (order >= 1) one_plus_r[1] = 1;
  TruncatedSeries geometric(order);
  for (int k = 0; k <= order; ++k) geometric[k] = 1;

  TruncatedSeries product = TruncatedSeries::Constant(order, 1);
  for (int t = 0; t < f.binomial_power; ++t) product = product * one_plus_r;
  for (int t = 0; t < f.geometric_power; ++t) product = product * geometric;
  if (product.order() < order) {
    throw Error(ErrorCode::kInternal, "series truncated below the pole order");
  }
  return product[order];
}

// Residue of (s1 - s2) / ((s1 s2 - 1) s1^(first + 1) s2^(second + 1)) at the
// origin in both variables, by expanding in a two-variable series.
inline Rational SKernelOracle(int first, int second) {
  if (first < 0 || second < 0) {
    throw Error(ErrorCode::kInvalidParameter, "kernel exponents must be >= 0");
  }
  const int d1 = first;
  const int d2 = second;
  // grid[a][b] is the coefficient of s1^a s2^b, truncated at (d1, d2).
  std::vector<std::vector<Rational>> inverse(d1 + 1, std::vector<Rational>(d2 + 1));
  for (int m = 0; m <= d1 && m <= d2; ++m) inverse[m][m] = -1;  // 1/(s1 s2 - 1)
  Rational coefficient = 0;
  // Multiply by (s1 - s2) and read off s1^first s2^second.
  if (d1 >= 1) coefficient += inverse[d1 - 1][d2];
  if (d2 >= 1) coefficient -= inverse[d1][d2 - 1];
  return coefficient;
}

}  // namespace tsscpp

#endif  // TSSCPP_SERIES_HPP_
