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

#include "tsscpp/identities.hpp"

#include <gtest/gtest.h>

#include "tsscpp/closed_form.hpp"
#include "tsscpp/error.hpp"

namespace tsscpp {
namespace {

Rational Frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

// Binomial with plain integer arithmetic, zero outside 0 <= k <= m.
BigInt Choose(long m, long k) {
  if (k < 0 || m < 0 || k > m) return 0;
  BigInt c = 1;
  for (long t = 1; t <= k; ++t) c = c * (m - k + t) / t;
  return c;
}

// (G, G') summed directly: sum_k p(n,k,0) sum_{m <= bound} C(top, m).
std::pair<Rational, Rational> DirectSumG(int n, int i) {
  Rational g = 0, gp = 0;
  for (int k = 0; k <= n; ++k) {
    const long top = 2L * n + 1 - i - k;
    BigInt a = 0, b = 0;
    for (long m = 0; m <= n + i - 2 * k; ++m) a += Choose(top, m);
    for (long m = 0; m <= n + k - 2 * i; ++m) b += Choose(top, m);
    g += PCoeff(n, k, 0) * Rational(a);
    gp += PCoeff(n, k, 0) * Rational(b);
  }
  return {g, gp};
}

TEST(SumFTest, SmallValues) {
  EXPECT_EQ(IdentitySumF(0), Rational(1));
  EXPECT_EQ(IdentitySumF(2), Rational(1));
  EXPECT_EQ(IdentitySumF(3), Rational(0));
  EXPECT_EQ(FTerm(1, 0) + FTerm(1, 1), Rational(0));
  EXPECT_EQ(FTerm(0, 0), Rational(1));
  EXPECT_EQ(FTerm(1, 0), Rational(1));
  EXPECT_EQ(FTerm(1, 1), Rational(-1));
}

TEST(SumFTest, TermsAreWeightedCoefficients) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(FTerm(n, k), PCoeff(n, k, 0) * PowerOfTwo(n - k)) << n << "," << k;
    }
    EXPECT_EQ(FTerm(n, n + 1), Rational(-SignPower(n)) * Frac(1, 2)) << n;
    EXPECT_EQ(FTerm(n, n + 2), Rational(0));
  }
}

TEST(SumFTest, ParitySweep) {
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(IdentitySumF(n), Rational(n % 2 == 0 ? 1 : 0)) << n;
}

TEST(WzTest, CertificateRelation) {
  EXPECT_TRUE(CheckWzCertificateF(3, 2));
  EXPECT_TRUE(CheckWzCertificateF(5, 1));
  EXPECT_EQ(WzCertificateF(4, 0), Rational(0));
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_TRUE(CheckWzCertificateF(n, k)) << n << "," << k;
  }
}

// Summing the certificate relation over 0 <= k <= n telescopes; the k = n + 1
// term of the larger sum is left over.
TEST(WzTest, TelescopedSum) {
  for (int n = 0; n <= 15; ++n) {
    EXPECT_EQ(IdentitySumF(n) - IdentitySumF(n + 1) + FTerm(n + 1, n + 1),
              WzCertificateF(n, n + 1) - WzCertificateF(n, 0))
        << n;
  }
}

TEST(WzTest, RangeChecked) {
  EXPECT_THROW(CheckWzCertificateF(3, 4), Error);
  EXPECT_THROW(WzCertificateF(3, 5), Error);
  EXPECT_THROW(IdentitySumF(-1), Error);
}

TEST(SumGTest, Examples) {
  EXPECT_EQ(IdentitySumG(4, 4).first, Rational(1));
  EXPECT_EQ(IdentitySumG(3, 1), std::make_pair(Rational(4), Rational(-4)));
  EXPECT_EQ(IdentitySumG(2, 0), std::make_pair(Rational(4), Rational(4)));
}

TEST(SumGTest, AgreesWithDirectSumAndPowersOfTwo) {
  for (int n = 0; n <= 12; ++n) {
    for (int i = 0; i <= n; ++i) {
      const auto got = IdentitySumG(n, i);
      EXPECT_EQ(got, DirectSumG(n, i)) << n << "," << i;
      const Rational two = PowerOfTwo(n - i);
      EXPECT_EQ(got.first, two);
      EXPECT_EQ(got.second, Rational(SignPower(n)) * two);
    }
  }
  EXPECT_THROW(IdentitySumG(3, 4), Error);
  EXPECT_THROW(IdentitySumG(3, -1), Error);
}

TEST(SumFPrimeTest, VanishesBelowTop) {
  EXPECT_EQ(IdentitySumFPrime(3, 1), Rational(0));
  EXPECT_EQ(IdentitySumFPrime(5, 4), Rational(0));
  for (int n = 1; n <= 12; ++n) {
    for (int i = 0; i <= n - 1; ++i) EXPECT_TRUE(IdentitySumFPrime(n, i).is_zero()) << n << "," << i;
  }
  EXPECT_THROW(IdentitySumFPrime(3, 3), Error);
  EXPECT_THROW(IdentitySumFPrime(0, 0), Error);
}

// At i = n the sum no longer vanishes, so the identity is not vacuous.
TEST(SumFPrimeTest, NonzeroAtTop) {
  for (int n = 1; n <= 8; ++n) {
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) sum += FPrimeTerm(n, n, k);
    EXPECT_FALSE(sum.is_zero()) << n;
  }
}

TEST(CertificateTest, TermwiseAndSummed) {
  EXPECT_TRUE(CheckFPrimeCertificate(4, 2, 1));
  for (int n = 1; n <= 12; ++n) {
    for (int i = 0; i <= n - 1; ++i) {
      EXPECT_TRUE(CheckFPrimeRecurrence(n, i)) << n << "," << i;
      for (int k = 0; k <= n; ++k) EXPECT_TRUE(CheckFPrimeCertificate(n, i, k));
    }
  }
  EXPECT_THROW(CheckFPrimeCertificate(3, 3, 0), Error);
  EXPECT_THROW(CheckFPrimeCertificate(3, 0, 4), Error);
}

TEST(HelpersTest, ExtendedCatalanAndPowers) {
  EXPECT_EQ(ExtendedCatalan(-1), Frac(-1, 2));
  EXPECT_EQ(ExtendedCatalan(-2), Rational(0));
  EXPECT_EQ(ExtendedCatalan(4), Rational(14));
  EXPECT_EQ(PowerOfTwo(5), Rational(32));
  EXPECT_EQ(PowerOfTwo(-3), Frac(1, 8));
  EXPECT_EQ(FactorialRatio({5}, {3, 2}), Rational(10));
}

}  // namespace
}  // namespace tsscpp
