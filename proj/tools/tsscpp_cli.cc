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

// Command-line front end. Exit codes: 0 success, 1 a verification failed,
// 2 bad usage or any library error (unknown vertex, cap exceeded, I/O).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsscpp/closed_form.hpp"
#include "tsscpp/error.hpp"
#include "tsscpp/graph.hpp"
#include "tsscpp/identities.hpp"
#include "tsscpp/limit_shape.hpp"
#include "tsscpp/linalg.hpp"
#include "tsscpp/recurrence.hpp"
#include "tsscpp/sampler.hpp"
#include "tsscpp/statistics.hpp"
#include "tsscpp/svg.hpp"
#include "tsscpp/verify.hpp"

namespace {

using tsscpp::Error;
using tsscpp::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Writes to stdout for "" or "-".
void WriteOutput(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
}

std::string ReadInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "lo..hi" or a single order.
std::pair<int, int> ParseRange(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used == text.size()) return {n, n};
    } else {
      const std::string a = text.substr(0, dots);
      const std::string b = text.substr(dots + 2);
      std::size_t used_b = 0;
      const int lo = std::stoi(a, &used);
      const int hi = std::stoi(b, &used_b);
      if (used == a.size() && used_b == b.size()) return {lo, hi};
    }
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::kInvalidParameter, "bad order range '" + text + "'");
}

// "x1,x2:y1,y2".
std::pair<tsscpp::VertexCoord, tsscpp::VertexCoord> ParseEdge(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::kInvalidParameter, "edge must look like x1,x2:y1,y2");
  }
  return {tsscpp::VertexCoord::Parse(text.substr(0, colon)),
          tsscpp::VertexCoord::Parse(text.substr(colon + 1))};
}

struct Options {
  int n = 1;
  std::string out;

  // graph
  std::string format = "json";
  bool kasteleyn = false;

  // count
  std::string count_method = "pfaffian";
  bool verify_all = false;

  // inverse
  std::string x, y;
  std::string inverse_method = "closed";
  bool check = false;
  bool tables = false;

  // prob
  std::vector<std::string> edges;
  bool field = false;

  // verify
  std::string suite = "all";
  std::string range = "1..4";

  // sample, render, limit-shape
  std::int64_t sweeps = 0;
  std::int64_t burnin = -1;
  std::uint64_t seed = 1;
  int chains = 1;
  std::int64_t every = 0;
  std::string stats;
  std::string input;
  bool rotate = false;
  bool circle = false;
  int window = tsscpp::kDefaultWindow;
  bool grid = false;
};

int RunGraph(const Options& o) {
  const auto graph = tsscpp::TsscppGraph::Build(o.n);
  if (o.kasteleyn) {
    WriteOutput(o.out, tsscpp::KasteleynMatrix(graph).ToJson().dump(2) + "\n");
  } else if (o.format == "dot") {
    WriteOutput(o.out, graph.ToDot());
  } else {
    WriteOutput(o.out, graph.ToJson().dump(2) + "\n");
  }
  return kExitOk;
}

int RunCount(const Options& o) {
  const int cap = tsscpp::EnumerationCapFromEnv();
  auto pfaffian = [&] {
    return tsscpp::Pfaffian(tsscpp::KasteleynMatrix(tsscpp::TsscppGraph::Build(o.n)))
        .abs()
        .num();
  };
  auto enumerate = [&] {
    long count = 0;
    tsscpp::ForEachMatching(
        tsscpp::TsscppGraph::Build(o.n), [&count](const tsscpp::Matching&) { ++count; }, cap);
    return tsscpp::BigInt(count);
  };
  auto formula = [&] { return tsscpp::AsmNumber(o.n + 1); };
  if (!o.verify_all) {
    tsscpp::BigInt z;
    if (o.count_method == "pfaffian") z = pfaffian();
    if (o.count_method == "enumerate") z = enumerate();
    if (o.count_method == "formula") z = formula();
    std::cout << z.get_str() << "\n";
    return kExitOk;
  }
  const tsscpp::BigInt a = pfaffian();
  const tsscpp::BigInt c = formula();
  bool agree = a == c;
  std::cout << "pfaffian " << a.get_str() << "\n";
  if (o.n <= cap) {
    const tsscpp::BigInt b = enumerate();
    agree = agree && a == b;
    std::cout << "enumerate " << b.get_str() << "\n";
  } else {
    std::cout << "enumerate skipped (n > cap " << cap << ")\n";
  }
  std::cout << "formula " << c.get_str() << "\n" << (agree ? "agree" : "DISAGREE") << "\n";
  return agree ? kExitOk : kExitFailed;
}

int RunInverse(const Options& o) {
  if (o.tables) {
    const auto method = o.inverse_method == "recurrence" ? tsscpp::TableMethod::kRecurrence
                                                         : tsscpp::TableMethod::kClosedForm;
    WriteOutput(o.out, tsscpp::BoundaryTablesCsv(tsscpp::BuildBoundaryTables(o.n, method)));
    return kExitOk;
  }
  if (o.inverse_method == "recurrence") {
    throw Error(ErrorCode::kInvalidParameter, "--method recurrence applies to --tables only");
  }
  if (o.x.empty() || o.y.empty()) {
    throw Error(ErrorCode::kInvalidParameter, "--x and --y are required without --tables");
  }
  const auto x = tsscpp::VertexCoord::Parse(o.x);
  const auto y = tsscpp::VertexCoord::Parse(o.y);
  const auto graph = tsscpp::TsscppGraph::Build(o.n);
  const int ix = graph.IndexOf(x);
  const int iy = graph.IndexOf(y);
  auto exact = [&] { return tsscpp::Invert(tsscpp::KasteleynMatrix(graph).dense())(ix, iy); };
  const tsscpp::Rational value =
      o.inverse_method == "exact" ? exact() : tsscpp::Kinv(o.n, x, y);
  std::cout << value << "\n";
  if (!o.check) return kExitOk;
  const tsscpp::Rational reference = exact();
  const bool equal = reference == tsscpp::Kinv(o.n, x, y);
  std::cout << "exact " << reference << "\n" << (equal ? "equal" : "DIFFER") << "\n";
  return equal ? kExitOk : kExitFailed;
}

int RunProb(const Options& o) {
  const auto source = o.inverse_method == "exact" ? tsscpp::InverseSource::kExactInverse
                                                  : tsscpp::InverseSource::kClosedForm;
  tsscpp::CorrelationKernel kernel(o.n, source);
  if (o.field) {
    WriteOutput(o.out, tsscpp::MarginalFieldCsv(kernel.graph(), kernel.MarginalField()));
    return kExitOk;
  }
  if (o.edges.empty()) throw Error(ErrorCode::kInvalidParameter, "give --edge or --field");
  tsscpp::EdgeQuery query{o.n, {}};
  for (const auto& e : o.edges) query.edges.push_back(ParseEdge(e));
  std::cout << kernel.EdgeProbability(query) << "\n";
  return kExitOk;
}

int RunVerify(const Options& o) {
  const auto [lo, hi] = ParseRange(o.range);
  const auto report = tsscpp::RunVerifySuite(o.suite, lo, hi);
  int passed = 0;
  for (const auto& c : report) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.key << ": " << c.detail << "\n";
    passed += c.passed;
  }
  std::cout << passed << "/" << report.size() << " checks passed\n";
  return tsscpp::AllPassed(report) ? kExitOk : kExitFailed;
}

tsscpp::GlauberOptions ChainOptions(const Options& o) {
  if (o.sweeps < 0) throw Error(ErrorCode::kInvalidParameter, "--sweeps must be >= 0");
  tsscpp::GlauberOptions g;
  g.sweeps = o.sweeps;
  g.burnin = o.burnin;
  g.seed = o.seed;
  g.chains = o.chains;
  return g;
}

int RunSample(const Options& o) {
  const auto graph = tsscpp::TsscppGraph::Build(o.n);
  std::ostringstream dump;
  std::int64_t seen = 0;
  std::function<void(const tsscpp::GlauberChain&)> on_sample;
  if (o.every > 0) {
    on_sample = [&](const tsscpp::GlauberChain& chain) {
      if (++seen % o.every == 0) dump << chain.SnapshotJson().dump() << "\n";
    };
  }
  const auto options = ChainOptions(o);
  const auto result = tsscpp::GlauberRun(graph, options, on_sample);
  if (o.every <= 0) {
    const std::int64_t burnin = options.burnin < 0 ? 10LL * o.n : options.burnin;
    dump << tsscpp::MatchingSnapshotJson(graph, result.final_states[0].mates(),
                                         burnin + options.sweeps)
                .dump()
         << "\n";
  }
  WriteOutput(o.out, dump.str());
  if (!o.stats.empty()) WriteOutput(o.stats, result.frequencies.ToCsv(graph));
  return kExitOk;
}

int RunRender(const Options& o) {
  tsscpp::RenderOptions render;
  render.rotate = o.rotate;
  render.circle_overlay = o.circle;
  if (!o.input.empty()) {
    // Last snapshot of a JSON-lines dump.
    std::istringstream lines(ReadInput(o.input));
    std::string line, last;
    while (std::getline(lines, line)) {
      if (!line.empty()) last = line;
    }
    nlohmann::json snapshot;
    try {
      snapshot = nlohmann::json::parse(last);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kInvalidParameter, "bad snapshot JSON: " + std::string(e.what()));
    }
    const auto graph = tsscpp::TsscppGraph::Build(snapshot.value("n", 0));
    WriteOutput(o.out,
                tsscpp::RenderSvg(graph, tsscpp::MatchingFromSnapshot(graph, snapshot), render));
    return kExitOk;
  }
  const auto graph = tsscpp::TsscppGraph::Build(o.n);
  const auto result = tsscpp::GlauberRun(graph, ChainOptions(o));
  WriteOutput(o.out, tsscpp::RenderSvg(graph, result.final_states[0], render));
  return kExitOk;
}

int RunLimitShape(const Options& o) {
  if (o.grid) {
    const auto g = tsscpp::CompareSaddleAndCircle();
    std::cout << "grid points " << g.points << ", compared " << g.compared << ", disagreements "
              << g.disagreements << ", skipped (Y=0) " << g.skipped_double_root
              << ", skipped (Y^2=4) " << g.skipped_singular << "\n";
    return g.disagreements == 0 ? kExitOk : kExitFailed;
  }
  const auto graph = tsscpp::TsscppGraph::Build(o.n);
  const auto result = tsscpp::GlauberRun(graph, ChainOptions(o));
  const auto& freq = result.frequencies;
  std::vector<double> f(graph.edges().size());
  for (std::size_t e = 0; e < f.size(); ++e) f[e] = freq.Frequency(static_cast<int>(e));
  const auto profile = tsscpp::FrozenProfile(graph, f, freq.samples(), o.window);
  const auto s = tsscpp::SummarizeProfile(profile);
  WriteOutput(o.out, tsscpp::FrozenProfileCsv(profile));
  std::cerr << "outer windows frozen " << s.outer_frozen << "/" << s.outer_windows
            << ", inner windows unfrozen " << s.inner_unfrozen << "/" << s.inner_windows << "\n";
  if (!o.check) return kExitOk;
  const bool ok = s.outer_windows > 0 && s.inner_windows > 0 && s.OuterFrozenFraction() >= 0.9 &&
                  s.InnerUnfrozenFraction() >= 0.9;
  return ok ? kExitOk : kExitFailed;
}

int RunIdentities(const Options& o) {
  std::ostringstream out;
  out << "identity,n,i,value,expected\n";
  const int n = o.n;
  out << "sum_f," << n << ",," << tsscpp::IdentitySumF(n) << ","
      << tsscpp::Rational(n % 2 == 0 ? 1 : 0) << "\n";
  bool ok = tsscpp::IdentitySumF(n) == tsscpp::Rational(n % 2 == 0 ? 1 : 0);
  for (int i = 0; i <= n; ++i) {
    const auto [g, gp] = tsscpp::IdentitySumG(n, i);
    const tsscpp::Rational two = tsscpp::PowerOfTwo(n - i);
    const tsscpp::Rational two_signed = tsscpp::Rational(tsscpp::SignPower(n)) * two;
    out << "sum_g," << n << "," << i << "," << g << "," << two << "\n";
    out << "sum_g_prime," << n << "," << i << "," << gp << "," << two_signed << "\n";
    ok = ok && g == two && gp == two_signed;
  }
  for (int i = 0; i + 1 <= n; ++i) {
    const auto s = tsscpp::IdentitySumFPrime(n, i);
    out << "sum_f_prime," << n << "," << i << "," << s << ",0/1\n";
    ok = ok && s.is_zero();
  }
  WriteOutput(o.out, out.str());
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations and sampling for the TSSCPP dimer model"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "Order of the graph G_n")->required()->check(CLI::PositiveNumber);
  };
  auto add_out = [&o](CLI::App* sub, const std::string& what) {
    sub->add_option("--out", o.out, what + " (default stdout)");
  };
  auto add_chain = [&o](CLI::App* sub) {
    sub->add_option("--sweeps", o.sweeps, "Post-burn-in sweeps")->check(CLI::NonNegativeNumber);
    sub->add_option("--burnin", o.burnin, "Burn-in sweeps (default 10 n)");
    sub->add_option("--seed", o.seed, "64-bit seed");
    sub->add_option("--chains", o.chains, "Independent chains")->check(CLI::PositiveNumber);
  };

  auto* graph = app.add_subcommand("graph", "Export G_n as JSON or DOT");
  add_n(graph);
  add_out(graph, "Output file");
  graph->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));
  graph->add_flag("--kasteleyn", o.kasteleyn, "Export the Kasteleyn matrix instead");

  auto* count = app.add_subcommand("count", "Count perfect matchings of G_n");
  add_n(count);
  count->add_option("--method", o.count_method)
      ->check(CLI::IsMember({"pfaffian", "enumerate", "formula"}));
  count->add_flag("--verify-all", o.verify_all, "Run all methods and compare");

  auto* inverse = app.add_subcommand("inverse", "Entries of the inverse Kasteleyn matrix");
  add_n(inverse);
  inverse->add_option("--x", o.x, "Row vertex x1,x2");
  inverse->add_option("--y", o.y, "Column vertex y1,y2");
  inverse->add_option("--method", o.inverse_method)
      ->check(CLI::IsMember({"closed", "exact", "recurrence"}));
  inverse->add_flag("--check", o.check, "Compare with the exact matrix inverse");
  inverse->add_flag("--tables", o.tables, "Print boundary tables as CSV");
  add_out(inverse, "CSV file for --tables");

  auto* prob = app.add_subcommand("prob", "Exact edge probabilities");
  add_n(prob);
  prob->add_option("--edge", o.edges, "Edge x1,x2:y1,y2 (repeatable, disjoint)");
  prob->add_option("--source", o.inverse_method)->check(CLI::IsMember({"closed", "exact"}));
  prob->add_flag("--field", o.field, "Print P(e) for every edge as CSV");
  add_out(prob, "CSV file for --field");

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"all", "counts", "inverse", "identities", "recurrences", "sumrule",
                             "orientation", "condensation", "sampler"}));
  verify->add_option("--n", o.range, "Order or range lo..hi");

  auto* sample = app.add_subcommand("sample", "Glauber dynamics sampling");
  add_n(sample);
  add_chain(sample);
  add_out(sample, "JSON-lines snapshot file");
  sample->add_option("--every", o.every, "Snapshot every k samples (default final only)");
  sample->add_option("--stats", o.stats, "Edge frequency CSV");

  auto* render = app.add_subcommand("render", "SVG of a sampled matching");
  render->add_option("--n", o.n, "Order (when sampling)")->check(CLI::PositiveNumber);
  add_chain(render);
  render->add_option("--in", o.input, "Render the last snapshot of this dump instead");
  render->add_flag("--rotate", o.rotate, "Rotate by pi/6");
  render->add_flag("--circle", o.circle, "Overlay the conjectured arctic arc");
  add_out(render, "SVG file");

  auto* limit = app.add_subcommand("limit-shape", "Frozen-region profile from sampling");
  limit->add_option("--n", o.n, "Order")->check(CLI::PositiveNumber);
  add_chain(limit);
  limit->add_option("--window", o.window, "Window side in lattice units")
      ->check(CLI::PositiveNumber);
  limit->add_flag("--grid", o.grid, "Compare saddle-root and circle classifications");
  limit->add_flag("--check", o.check, "Exit 1 unless 90% of outer/inner windows classify");
  add_out(limit, "Profile CSV");

  auto* identities = app.add_subcommand("identities", "Summation identities at one order");
  identities->add_option("--n", o.n, "Order")->required()->check(CLI::NonNegativeNumber);
  add_out(identities, "CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count && o.count_method == "enumerate" && !o.verify_all &&
        o.n > tsscpp::EnumerationCapFromEnv()) {
      throw Error(ErrorCode::kResourceLimit,
                  "--method enumerate needs n <= " +
                      std::to_string(tsscpp::EnumerationCapFromEnv()));
    }
    if (*graph) return RunGraph(o);
    if (*count) return RunCount(o);
    if (*inverse) return RunInverse(o);
    if (*prob) return RunProb(o);
    if (*verify) return RunVerify(o);
    if (*sample) return RunSample(o);
    if (*render) return RunRender(o);
    if (*limit) return RunLimitShape(o);
    if (*identities) return RunIdentities(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
