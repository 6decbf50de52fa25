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

// Hypergeometric summation identities satisfied by p(n, k, 0), together with
// the Wilf-Zeilberger and Zeilberger certificates that prove them.
//
// Summands are evaluated one step past their natural range (k = n + 1), so
// factorial quotients follow the usual convention 1/m! = 0 for m < 0 and the
// Catalan number is continued by C_{-1} = -1/2, C_{m} = 0 for m < -1.

#ifndef TSSCPP_IDENTITIES_HPP_
#define TSSCPP_IDENTITIES_HPP_

#include <initializer_list>
#include <string>
#include <utility>

#include "tsscpp/closed_form.hpp"
#include "tsscpp/error.hpp"
#include "tsscpp/rational.hpp"

namespace tsscpp {

// prod numerator! / prod denominator!, zero if a denominator is negative.
inline Rational FactorialRatio(std::initializer_list<long> numerator,
                               std::initializer_list<long> denominator) {
  for (long d : denominator) {
    if (d < 0) return 0;
  }
  BigInt top = 1;
  BigInt bottom = 1;
  for (long a : numerator) {
    if (a < 0) throw Error(ErrorCode::kInternal, "negative factorial in a numerator");
    top *= Factorial(a);
  }
  for (long d : denominator) bottom *= Factorial(d);
  return Rational(top, bottom);
}

inline Rational ExtendedCatalan(long m) {
  if (m >= 0) return Rational(Catalan(m));
  if (m == -1) return Rational(-1, 2);
  return 0;
}

inline Rational PowerOfTwo(long e) {
  BigInt p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

// f_n(k) = p(n, k, 0) 2^{n-k}, continued to every k >= 0.
inline Rational FTerm(int n, int k) {
  if (n < 0 || k < 0) throw Error(ErrorCode::kInvalidParameter, "f_n(k) needs n, k >= 0");
  if (k >= n + 2) return 0;
  return FactorialRatio({n + k + 1, 2 * n - k + 1}, {k, 3 * n - k + 2}) *
         Rational(SignPower(k) * (3 * n - 3 * k + 2)) * ExtendedCatalan(n - k) *
         PowerOfTwo(n - k);
}

// sum_{k=0}^{n} f_n(k); equals 1 for even n and 0 for odd n.
inline Rational IdentitySumF(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidParameter, "n must be >= 0");
  Rational sum = 0;
  for (int k = 0; k <= n; ++k) sum += FTerm(n, k);
  return sum;
}

// The WZ certificate for f; h(n, 0) = 0.
inline Rational WzCertificateF(int n, int k) {
  if (n < 0 || k < 0 || k > n + 1) {
    throw Error(ErrorCode::kInvalidParameter, "certificate index out of range");
  }
  return Rational(SignPower(k) * (n + 2 - k) * (n - k + 1) * (5 * n - 3 * k + 8)) *
         PowerOfTwo(n - k + 1) *
         FactorialRatio({2 * n + 2 - k, n + 1 + k, 2 * n + 2 - 2 * k},
                        {k - 1, n + 2 - k, n + 2 - k, 3 * n + 5 - k});
}

// f_n(k) - f_{n+1}(k) == h(n, k + 1) - h(n, k).
inline bool CheckWzCertificateF(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorCode::kInvalidParameter, "need 0 <= k <= n");
  }
  return FTerm(n, k) - FTerm(n + 1, k) == WzCertificateF(n, k + 1) - WzCertificateF(n, k);
}

// (G_{n,i}, G'_{n,i}); expected (2^{n-i}, (-1)^n 2^{n-i}).
inline std::pair<Rational, Rational> IdentitySumG(int n, int i) {
  if (n < 0 || i < 0 || i > n) {
    throw Error(ErrorCode::kInvalidParameter,
                "need 0 <= i <= n, got (" + std::to_string(n) + "," + std::to_string(i) + ")");
  }
  Rational g = 0;
  Rational g_prime = 0;
  for (int k = 0; k <= n; ++k) {
    const Rational weight = PCoeff(n, k, 0);
    const long top = 2L * n + 1 - i - k;
    g += weight * Rational(PartialBinomialSum(top, n + i - 2 * k));
    g_prime += weight * Rational(PartialBinomialSum(top, n + k - 2 * i));
  }
  return {g, g_prime};
}

// f'_{n,i}(k), continued to every k >= 0 and every i >= 0.
inline Rational FPrimeTerm(int n, int i, int k) {
  if (n < 0 || i < 0 || k < 0) throw Error(ErrorCode::kInvalidParameter, "negative index");
  if (k >= n + 2 || 2 * n - i - k < 0) return 0;
  return Rational(SignPower(k + 1) * (3 * n - 3 * k + 2)) *
         FactorialRatio({n + k + 1, 2 * n - k + 1, 2 * n - i - k},
                        {k, 3 * n - k + 2, n + i - 2 * k + 1, n + k - 2 * i}) *
         ExtendedCatalan(n - k);
}

inline Rational IdentitySumFPrime(int n, int i) {
  if (n < 1 || i < 0 || i > n - 1) {
    throw Error(ErrorCode::kInvalidParameter,
                "need 0 <= i <= n - 1, got (" + std::to_string(n) + "," + std::to_string(i) + ")");
  }
  Rational sum = 0;
  for (int k = 0; k <= n; ++k) sum += FPrimeTerm(n, i, k);
  return sum;
}

// f'_{n,i}(k) R(k, i) with the rational certificate R multiplied through, so
// the factors (n + i - 2k + 2) and (n + k - 2i) cancel against factorials and
// no division by zero can occur.
inline Rational FPrimeTimesCertificate(int n, int i, int k) {
  if (k >= n + 2 || 2 * n - i - k < 0) return 0;
  return Rational(SignPower(k + 1) * 6L * k * (i - n) * (2 * n + 1 - 2 * k) *
                  (2 * n + 2 - k)) *
         FactorialRatio({n + k + 1, 2 * n - k + 1, 2 * n - i - k},
                        {k, 3 * n - k + 2, n + i - 2 * k + 2, n + k - 2 * i - 1}) *
         ExtendedCatalan(n - k);
}

// The Zeilberger recurrence in i, certified termwise by the forward
// difference in k of f' R.
inline bool CheckFPrimeCertificate(int n, int i, int k) {
  if (n < 1 || i < 0 || i > n - 1 || k < 0 || k > n) {
    throw Error(ErrorCode::kInvalidParameter, "need 0 <= i <= n - 1 and 0 <= k <= n");
  }
  const Rational lhs =
      Rational(2L * (i + 1) * (i - 2 * n - 1) * (2 * i - 2 * n - 1)) * FPrimeTerm(n, i, k) +
      Rational(static_cast<long>(i - 3 * n - 2) * (i - n + 1) * (i + n + 2)) *
          FPrimeTerm(n, i + 1, k);
  return lhs == FPrimeTimesCertificate(n, i, k + 1) - FPrimeTimesCertificate(n, i, k);
}

// Summed form of the same recurrence: the right side vanishes for i < n.
inline bool CheckFPrimeRecurrence(int n, int i) {
  const Rational lhs =
      Rational(2L * (i + 1) * (2 * n + 1 - i) * (2 * n + 1 - 2 * i)) * IdentitySumFPrime(n, i) +
      Rational(static_cast<long>(3 * n + 2 - i) * (n - 1 - i) * (n + 2 + i)) *
          (i + 1 <= n - 1 ? IdentitySumFPrime(n, i + 1) : Rational(0));
  return lhs.is_zero();
}

}  // namespace tsscpp

#endif  // TSSCPP_IDENTITIES_HPP_
