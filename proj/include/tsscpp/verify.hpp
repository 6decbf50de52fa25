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

// Named invariant suites over a range of orders. Each check carries a
// sortable key so reports print in a stable order.

#ifndef TSSCPP_VERIFY_HPP_
#define TSSCPP_VERIFY_HPP_

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tsscpp/closed_form.hpp"
#include "tsscpp/error.hpp"
#include "tsscpp/graph.hpp"
#include "tsscpp/identities.hpp"
#include "tsscpp/linalg.hpp"
#include "tsscpp/recurrence.hpp"
#include "tsscpp/sampler.hpp"

namespace tsscpp {

struct CheckResult {
  std::string key;
  bool passed = false;
  std::string detail;
};

using VerifyReport = std::vector<CheckResult>;

inline bool AllPassed(const VerifyReport& report) {
  return std::all_of(report.begin(), report.end(), [](const auto& c) { return c.passed; });
}

inline constexpr std::string_view kVerifySuites[] = {
    "counts", "inverse", "identities", "recurrences", "sumrule", "orientation", "condensation",
    "sampler"};

namespace internal {

inline std::string Key(std::string_view suite, int n, const std::string& what = "") {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03d", n);
  return std::string(suite) + "/n=" + buf + (what.empty() ? "" : "/" + what);
}

}  // namespace internal

// |Pf K_n| against the product formula.
inline void VerifyCounts(int n, VerifyReport& out) {
  const Rational pf = Pfaffian(KasteleynMatrix(TsscppGraph::Build(n))).abs();
  const Rational expected(AsmNumber(n + 1));
  out.push_back({internal::Key("counts", n), pf == expected,
                 "|Pf K| = " + pf.num().get_str() + ", A_{n+1} = " + expected.num().get_str()});
}

// Closed form against the exact inverse, and K times the b-column.
inline void VerifyInverse(int n, VerifyReport& out) {
  const auto graph = TsscppGraph::Build(n);
  const auto k = KasteleynMatrix(graph);
  const Matrix exact = Invert(k.dense());
  const Matrix closed = ClosedFormInverse(n).FullInverse();
  int mismatches = 0;
  const int d = graph.num_vertices();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) mismatches += !(exact(i, j) == closed(i, j));
  }
  out.push_back({internal::Key("inverse", n, "entrywise"), mismatches == 0,
                 std::to_string(mismatches) + " mismatches over " + std::to_string(d * d) +
                     " entries"});
  const int b = graph.IndexOf(graph.b());
  int bad_rows = 0;
  for (int x = 0; x < d; ++x) {
    Rational s = 0;
    for (int z : graph.neighbors(x)) s += k(x, z) * KinvB(n, graph.vertex(z));
    bad_rows += !(s == Rational(x == b ? 1 : 0));
  }
  out.push_back({internal::Key("inverse", n, "b-column"), bad_rows == 0,
                 std::to_string(bad_rows) + " rows of K K^-1(., b) differ from the identity"});
}

inline void VerifyIdentities(int n, VerifyReport& out) {
  const std::string key = "identities";
  const Rational f = IdentitySumF(n);
  out.push_back({internal::Key(key, n, "sum-f"), f == Rational(n % 2 == 0 ? 1 : 0),
                 "sum = " + f.ToString()});
  int bad = 0;
  for (int k = 0; k <= n; ++k) bad += !CheckWzCertificateF(n, k);
  out.push_back({internal::Key(key, n, "wz-f"), bad == 0, std::to_string(bad) + " failures"});
  bad = 0;
  for (int i = 0; i <= n; ++i) {
    const auto [g, g_prime] = IdentitySumG(n, i);
    const Rational two = PowerOfTwo(n - i);
    bad += !(g == two) + !(g_prime == Rational(SignPower(n)) * two);
  }
  out.push_back({internal::Key(key, n, "sum-g"), bad == 0, std::to_string(bad) + " failures"});
  if (n < 1) return;
  bad = 0;
  int bad_cert = 0;
  int bad_rec = 0;
  for (int i = 0; i <= n - 1; ++i) {
    bad += !IdentitySumFPrime(n, i).is_zero();
    for (int k = 0; k <= n; ++k) bad_cert += !CheckFPrimeCertificate(n, i, k);
    bad_rec += !CheckFPrimeRecurrence(n, i);
  }
  out.push_back(
      {internal::Key(key, n, "sum-fprime"), bad == 0, std::to_string(bad) + " nonzero sums"});
  out.push_back({internal::Key(key, n, "zeilberger-fprime"), bad_cert == 0 && bad_rec == 0,
                 std::to_string(bad_cert) + " termwise and " + std::to_string(bad_rec) +
                     " summed failures"});
}

inline void VerifyRecurrences(int n, VerifyReport& out) {
  const std::string key = "recurrences";
  out.push_back({internal::Key(key, n, "top-boundary"),
                 RTable(n, TableMethod::kRecurrence) == RTable(n, TableMethod::kClosedForm),
                 "condensation recurrence vs closed form"});
  out.push_back({internal::Key(key, n, "T-from-pfaffians"), TTable(n) == TTableFromPfaffians(n),
                 "T_n(i) vs deleted-vertex Pfaffian ratios"});
  const auto by_rec = DiagonalTablesByRecurrence(n);
  const auto closed = DiagonalTablesClosedForm(n);
  out.push_back({internal::Key(key, n, "gb"), by_rec.gb == closed.gb,
                 "boundary recurrence vs closed form"});
  out.push_back({internal::Key(key, n, "gdiag"), by_rec.gdiag == closed.gdiag,
                 "diagonal recurrence vs closed form"});
  if (n >= 2) {
    const auto report = CheckPartitionRecurrence(n);
    out.push_back({internal::Key(key, n, "partition"), report.holds,
                   "Z_n = " + report.z_n.ToString() + ", right side = " + report.rhs.ToString()});
  }
}

inline void VerifySumRule(int n, VerifyReport& out) {
  const Rational s = SumRule(n);
  out.push_back({internal::Key("sumrule", n), s == SumRuleExpected(n),
                 "sum = " + s.ToString() + ", expected " + SumRuleExpected(n).ToString()});
}

inline void VerifyOrientation(int n, VerifyReport& out) {
  const auto graph = TsscppGraph::Build(n);
  const auto report = CheckOrientation(graph, KasteleynMatrix(graph));
  out.push_back({internal::Key("orientation", n), report.ok,
                 std::to_string(report.violating_faces.size()) + " of " +
                     std::to_string(report.ccw_counts.size()) + " faces with an even count"});
}

// Every 4-subset of outer-face vertices, taken in boundary order.
inline void VerifyCondensation(int n, VerifyReport& out) {
  const auto graph = TsscppGraph::Build(n);
  const auto k = KasteleynMatrix(graph);
  const auto outer = OuterFaceVertices(graph);
  std::map<std::vector<int>, Rational> cache;
  const int m = static_cast<int>(outer.size());
  long total = 0, bad = 0;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        for (int d = c + 1; d < m; ++d) {
          ++total;
          bad += !CheckCondensation(graph, k, graph.vertex(outer[a]), graph.vertex(outer[b]),
                                    graph.vertex(outer[c]), graph.vertex(outer[d]), &cache);
        }
      }
    }
  }
  out.push_back({internal::Key("condensation", n), bad == 0,
                 std::to_string(bad) + " failures over " + std::to_string(total) +
                     " outer-face quadruples"});
}

inline void VerifySampler(int n, VerifyReport& out, int cap = EnumerationCapFromEnv()) {
  const auto report = CertifyErgodicity(n, cap);
  out.push_back({internal::Key("sampler", n, "ergodicity"), report.ergodic,
                 "reached " + std::to_string(report.reached) + " of " +
                     std::to_string(report.expected)});
}

// Runs `suite` ("all" for every suite) for n in [lo, hi]. Orders a suite
// cannot handle (n = 0 outside the identities) are skipped, and so is the
// exhaustive sampler check above the enumeration cap when running "all".
inline VerifyReport RunVerifySuite(std::string_view suite, int lo, int hi,
                                   int cap = EnumerationCapFromEnv()) {
  if (lo < 0 || hi < lo) throw Error(ErrorCode::kInvalidParameter, "bad order range");
  const bool all = suite == "all";
  if (!all && std::find(std::begin(kVerifySuites), std::end(kVerifySuites), suite) ==
                  std::end(kVerifySuites)) {
    throw Error(ErrorCode::kInvalidParameter, "unknown suite '" + std::string(suite) + "'");
  }
  VerifyReport out;
  for (int n = lo; n <= hi; ++n) {
    if (all || suite == "identities") VerifyIdentities(n, out);
    if (n < 1) continue;
    if (all || suite == "counts") VerifyCounts(n, out);
    if (all || suite == "inverse") VerifyInverse(n, out);
    if (all || suite == "recurrences") VerifyRecurrences(n, out);
    if (all || suite == "sumrule") VerifySumRule(n, out);
    if (all || suite == "orientation") VerifyOrientation(n, out);
    if (all || suite == "condensation") VerifyCondensation(n, out);
    if ((all && n <= cap) || suite == "sampler") VerifySampler(n, out, cap);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.key < b.key; });
  return out;
}

}  // namespace tsscpp

#endif  // TSSCPP_VERIFY_HPP_
