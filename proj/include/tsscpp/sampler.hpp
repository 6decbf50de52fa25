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

// Glauber dynamics on perfect matchings of G_n.
//
// A move is an even cycle of the graph. When the current matching uses every
// other edge of the cycle, the move swaps in the complementary edges. Each
// step picks a move uniformly and applies it with probability 1/2, which is
// a symmetric chain and therefore has the uniform distribution as its
// stationary law. The cycles are boundaries of small connected unions of
// bounded faces, and reachability of every matching from one start is
// certified by breadth-first search for small n.

#ifndef TSSCPP_SAMPLER_HPP_
#define TSSCPP_SAMPLER_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tsscpp/closed_form.hpp"
#include "tsscpp/error.hpp"
#include "tsscpp/graph.hpp"

namespace tsscpp {

struct MoveSet {
  std::vector<std::vector<int>> cycles;  // vertex cycles, even length

  int size() const { return static_cast<int>(cycles.size()); }
};

inline constexpr int kDefaultMoveFaces = 3;

namespace internal {

// Boundary of a union of faces, as a vertex cycle, when it is a single
// simple cycle; empty otherwise.
inline std::vector<int> UnionBoundaryCycle(const TsscppGraph& graph,
                                           const std::vector<int>& face_ids) {
  std::map<std::pair<int, int>, int> multiplicity;
  for (int f : face_ids) {
    const auto& c = graph.faces()[f].cycle;
    for (std::size_t t = 0; t < c.size(); ++t) {
      const int a = c[t];
      const int b = c[(t + 1) % c.size()];
      ++multiplicity[{std::min(a, b), std::max(a, b)}];
    }
  }
  std::map<int, std::vector<int>> adjacent;
  int edge_count = 0;
  for (const auto& [edge, count] : multiplicity) {
    if (count != 1) continue;
    adjacent[edge.first].push_back(edge.second);
    adjacent[edge.second].push_back(edge.first);
    ++edge_count;
  }
  for (const auto& [v, nbrs] : adjacent) {
    if (nbrs.size() != 2) return {};
  }
  std::vector<int> cycle;
  const int start = adjacent.begin()->first;
  int prev = -1;
  int cur = start;
  do {
    cycle.push_back(cur);
    const auto& nbrs = adjacent[cur];
    const int next = nbrs[0] != prev ? nbrs[0] : nbrs[1];
    prev = cur;
    cur = next;
  } while (cur != start && static_cast<int>(cycle.size()) <= edge_count);
  if (static_cast<int>(cycle.size()) != edge_count) return {};
  return cycle;
}

}  // namespace internal

// Boundary cycles of connected unions of at most `max_faces` bounded faces
// that are simple cycles of even length; deduplicated by edge set and
// ordered deterministically.
inline MoveSet BuildMoveSet(const TsscppGraph& graph, int max_faces = kDefaultMoveFaces) {
  if (max_faces < 1) throw Error(ErrorCode::kInvalidParameter, "max_faces must be >= 1");
  const int nf = static_cast<int>(graph.faces().size());
  // Faces sharing an edge.
  std::map<std::pair<int, int>, std::vector<int>> faces_on_edge;
  for (int f = 0; f < nf; ++f) {
    const auto& c = graph.faces()[f].cycle;
    for (std::size_t t = 0; t < c.size(); ++t) {
      const int a = c[t];
      const int b = c[(t + 1) % c.size()];
      faces_on_edge[{std::min(a, b), std::max(a, b)}].push_back(f);
    }
  }
  std::vector<std::set<int>> face_neighbors(nf);
  for (const auto& [edge, fs] : faces_on_edge) {
    for (int f : fs) {
      for (int g : fs) {
        if (f != g) face_neighbors[f].insert(g);
      }
    }
  }
  std::set<std::vector<int>> groups;
  std::vector<std::vector<int>> frontier;
  for (int f = 0; f < nf; ++f) frontier.push_back({f});
  groups.insert(frontier.begin(), frontier.end());
  for (int size = 2; size <= max_faces; ++size) {
    std::vector<std::vector<int>> next;
    for (const auto& group : frontier) {
      for (int f : group) {
        for (int g : face_neighbors[f]) {
          if (std::find(group.begin(), group.end(), g) != group.end()) continue;
          auto grown = group;
          grown.push_back(g);
          std::sort(grown.begin(), grown.end());
          if (groups.insert(grown).second) next.push_back(std::move(grown));
        }
      }
    }
    frontier = std::move(next);
  }
  std::set<std::vector<int>> seen_edges;
  std::vector<std::vector<int>> cycles;
  for (const auto& group : groups) {
    auto cycle = internal::UnionBoundaryCycle(graph, group);
    if (cycle.empty() || cycle.size() % 2 != 0) continue;
    auto key = cycle;
    std::sort(key.begin(), key.end());
    if (!seen_edges.insert(key).second) continue;
    cycles.push_back(std::move(cycle));
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return MoveSet{std::move(cycles)};
}

// Which half of the cycle's edges the matching uses: 0 for (c0 c1)(c2 c3)...,
// 1 for (c1 c2)...(c_{L-1} c0), -1 if neither.
inline int AlternatingPhase(const std::vector<int>& mate, const std::vector<int>& cycle) {
  const std::size_t len = cycle.size();
  for (int phase = 0; phase < 2; ++phase) {
    bool ok = true;
    for (std::size_t t = phase; t < len + phase && ok; t += 2) {
      ok = mate[cycle[t % len]] == cycle[(t + 1) % len];
    }
    if (ok) return phase;
  }
  return -1;
}

// Rotates an alternating cycle in place; returns false if not alternating.
inline bool FlipCycle(std::vector<int>& mate, const std::vector<int>& cycle) {
  const int phase = AlternatingPhase(mate, cycle);
  if (phase < 0) return false;
  const std::size_t len = cycle.size();
  for (std::size_t t = 1 - phase; t < len + 1 - phase; t += 2) {
    const int a = cycle[t % len];
    const int b = cycle[(t + 1) % len];
    mate[a] = b;
    mate[b] = a;
  }
  return true;
}

// Deterministic perfect matching: always match the lowest unmatched vertex to
// its lowest-index free neighbour, backtracking when a vertex is stranded.
inline Matching CanonicalMatching(const TsscppGraph& graph) {
  const int nv = graph.num_vertices();
  std::vector<int> mate(nv, -1);
  // Each frame: the vertex being matched and the next neighbour slot to try.
  std::vector<std::pair<int, int>> stack;
  int v = 0;
  while (true) {
    while (v < nv && mate[v] != -1) ++v;
    if (v == nv) break;
    stack.push_back({v, 0});
    bool placed = false;
    while (!stack.empty() && !placed) {
      auto& [u, slot] = stack.back();
      if (mate[u] != -1) {  // undo the previous choice of this frame
        mate[mate[u]] = -1;
        mate[u] = -1;
      }
      const auto& nbrs = graph.neighbors(u);
      while (slot < static_cast<int>(nbrs.size()) && mate[nbrs[slot]] != -1) ++slot;
      if (slot < static_cast<int>(nbrs.size())) {
        const int w = nbrs[slot++];
        mate[u] = w;
        mate[w] = u;
        placed = true;
        v = u + 1;
      } else {
        stack.pop_back();
      }
    }
    if (!placed) throw Error(ErrorCode::kInternal, "graph has no perfect matching");
  }
  return Matching(std::move(mate));
}

struct ErgodicityReport {
  bool ergodic = false;
  std::int64_t reached = 0;
  std::int64_t expected = 0;
};

// Breadth-first search from the canonical matching under the move set.
inline ErgodicityReport CertifyErgodicity(const TsscppGraph& graph, const MoveSet& moves,
                                          int cap = kDefaultEnumerationCap) {
  if (graph.n() > cap) {
    throw Error(ErrorCode::kResourceLimit,
                "ergodicity certification of G_" + std::to_string(graph.n()) +
                    " exceeds the cap n <= " + std::to_string(cap));
  }
  ErgodicityReport report;
  report.expected = AsmNumber(graph.n() + 1).get_si();
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  auto start = CanonicalMatching(graph).mates();
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    auto state = std::move(queue.front());
    queue.pop_front();
    for (const auto& cycle : moves.cycles) {
      auto next = state;
      if (!FlipCycle(next, cycle)) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  report.reached = static_cast<std::int64_t>(seen.size());
  report.ergodic = report.reached == report.expected;
  return report;
}

inline ErgodicityReport CertifyErgodicity(int n, int cap = kDefaultEnumerationCap) {
  const auto graph = TsscppGraph::Build(n);
  return CertifyErgodicity(graph, BuildMoveSet(graph), cap);
}

// Seed of chain `chain` in a multi-chain run.
inline std::uint64_t DeriveChainSeed(std::uint64_t seed, int chain) {
  return seed ^ (static_cast<std::uint64_t>(chain) + 1) * 0x9E3779B97F4A7C15ULL;
}

// {"n": N, "sweep": S, "edges": [[[x1, x2], [y1, y2]], ...]}, edges listed
// from their lower-index endpoint in vertex order.
inline nlohmann::json MatchingSnapshotJson(const TsscppGraph& graph, const std::vector<int>& mate,
                                           std::int64_t sweep) {
  nlohmann::json edges = nlohmann::json::array();
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
    if (mate[v] < v) continue;
    const auto& a = graph.vertex(v);
    const auto& b = graph.vertex(mate[v]);
    edges.push_back({{a.x1, a.x2}, {b.x1, b.x2}});
  }
  return {{"n", graph.n()}, {"sweep", sweep}, {"edges", std::move(edges)}};
}

// Inverse of MatchingSnapshotJson; the result is checked to be a perfect
// matching of `graph`.
inline Matching MatchingFromSnapshot(const TsscppGraph& graph, const nlohmann::json& snapshot) {
  if (!snapshot.is_object() || !snapshot.contains("edges") ||
      snapshot.value("n", -1) != graph.n()) {
    throw Error(ErrorCode::kInvalidParameter, "snapshot does not describe G_" +
                                                  std::to_string(graph.n()));
  }
  std::vector<int> mate(graph.num_vertices(), -1);
  for (const auto& e : snapshot.at("edges")) {
    const int a = graph.IndexOf({e.at(0).at(0).get<int>(), e.at(0).at(1).get<int>()});
    const int b = graph.IndexOf({e.at(1).at(0).get<int>(), e.at(1).at(1).get<int>()});
    if (mate[a] != -1 || mate[b] != -1) {
      throw Error(ErrorCode::kInvalidParameter, "snapshot edges overlap");
    }
    mate[a] = b;
    mate[b] = a;
  }
  Matching m(std::move(mate));
  if (!IsPerfectMatching(graph, m)) {
    throw Error(ErrorCode::kInvalidParameter, "snapshot is not a perfect matching");
  }
  return m;
}

class GlauberChain {
 public:
  GlauberChain(const TsscppGraph& graph, const MoveSet& moves, std::uint64_t seed)
      : graph_(&graph),
        moves_(&moves),
        mate_(CanonicalMatching(graph).mates()),
        rng_(seed),
        pick_(0, std::max(0, moves.size() - 1)) {}

  const std::vector<int>& mates() const { return mate_; }
  Matching matching() const { return Matching(mate_); }
  std::int64_t sweeps() const { return sweeps_; }

  void Step() {
    if (moves_->size() == 0) return;
    const auto& cycle = moves_->cycles[pick_(rng_)];
    if (AlternatingPhase(mate_, cycle) < 0) return;
    if ((rng_() >> 63) == 0) return;
    FlipCycle(mate_, cycle);
  }

  // One sweep is |moves| steps.
  void Sweep() {
    for (int s = 0; s < moves_->size(); ++s) Step();
    ++sweeps_;
  }

  nlohmann::json SnapshotJson() const { return MatchingSnapshotJson(*graph_, mate_, sweeps_); }

 private:
  const TsscppGraph* graph_;
  const MoveSet* moves_;
  std::vector<int> mate_;
  std::mt19937_64 rng_;
  std::uniform_int_distribution<int> pick_;
  std::int64_t sweeps_ = 0;
};

// Per-edge occupation counts with contiguous batches for batch-means error
// bars. Counters add, so chains can be merged in any order.
class EdgeFrequencies {
 public:
  EdgeFrequencies() = default;
  EdgeFrequencies(const TsscppGraph& graph, std::int64_t batch_size)
      : num_edges_(static_cast<int>(graph.edges().size())), batch_size_(batch_size) {
    if (batch_size < 1) throw Error(ErrorCode::kInvalidParameter, "batch size must be >= 1");
    totals_.assign(num_edges_, 0);
  }

  void Record(const TsscppGraph& graph, const std::vector<int>& mate) {
    if (current_.empty()) current_.assign(num_edges_, 0);
    for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
      if (mate[v] < v) continue;
      const int e = *graph.EdgeIndex(v, mate[v]);
      ++totals_[e];
      ++current_[e];
    }
    ++samples_;
    if (++in_batch_ == batch_size_) {
      batches_.push_back(std::move(current_));
      current_.clear();
      in_batch_ = 0;
    }
  }

  void Merge(const EdgeFrequencies& other) {
    if (other.num_edges_ != num_edges_) throw Error(ErrorCode::kInvalidShape, "edge count mismatch");
    for (int e = 0; e < num_edges_; ++e) totals_[e] += other.totals_[e];
    samples_ += other.samples_;
    batches_.insert(batches_.end(), other.batches_.begin(), other.batches_.end());
  }

  std::int64_t samples() const { return samples_; }
  int num_batches() const { return static_cast<int>(batches_.size()); }
  const std::vector<std::int64_t>& totals() const { return totals_; }

  double Frequency(int e) const {
    return samples_ == 0 ? 0.0 : static_cast<double>(totals_[e]) / samples_;
  }

  // Standard error of Frequency(e) from the spread of complete batch means.
  double StandardError(int e) const {
    const int b = num_batches();
    if (b < 2) return std::numeric_limits<double>::infinity();
    double mean = 0;
    for (const auto& batch : batches_) mean += static_cast<double>(batch[e]) / batch_size_;
    mean /= b;
    double ss = 0;
    for (const auto& batch : batches_) {
      const double d = static_cast<double>(batch[e]) / batch_size_ - mean;
      ss += d * d;
    }
    return std::sqrt(ss / (b - 1) / b);
  }

  std::string ToCsv(const TsscppGraph& graph) const {
    std::ostringstream out;
    out << "x1,x2,y1,y2,frequency,stderr\n";
    for (int e = 0; e < num_edges_; ++e) {
      const auto& a = graph.vertex(graph.edges()[e].u);
      const auto& c = graph.vertex(graph.edges()[e].v);
      out << a.x1 << "," << a.x2 << "," << c.x1 << "," << c.x2 << "," << Frequency(e) << ","
          << StandardError(e) << "\n";
    }
    return out.str();
  }

 private:
  int num_edges_ = 0;
  std::int64_t batch_size_ = 1;
  std::vector<std::int64_t> totals_;
  std::vector<std::int64_t> current_;
  std::vector<std::vector<std::int64_t>> batches_;
  std::int64_t samples_ = 0;
  std::int64_t in_batch_ = 0;
};

struct GlauberOptions {
  std::int64_t sweeps = 0;
  std::int64_t burnin = -1;  // -1 selects 10 n
  std::uint64_t seed = 1;
  int chains = 1;
  std::int64_t batches = 50;  // target batch count per chain
  int max_faces = kDefaultMoveFaces;
};

struct GlauberResult {
  std::vector<Matching> final_states;  // one per chain
  EdgeFrequencies frequencies;
};

// Runs independent chains in parallel, one sample per post-burn-in sweep.
// `on_sample` (if set) sees every sample of chain 0, in order.
inline GlauberResult GlauberRun(
    const TsscppGraph& graph, const GlauberOptions& options,
    const std::function<void(const GlauberChain&)>& on_sample = nullptr) {
  if (options.sweeps < 0 || options.chains < 1) {
    throw Error(ErrorCode::kInvalidParameter, "sweeps must be >= 0 and chains >= 1");
  }
  const std::int64_t burnin = options.burnin < 0 ? 10LL * graph.n() : options.burnin;
  const MoveSet moves = BuildMoveSet(graph, options.max_faces);
  const std::int64_t batch =
      std::max<std::int64_t>(1, options.sweeps / std::max<std::int64_t>(1, options.batches));
  std::vector<EdgeFrequencies> freq(options.chains, EdgeFrequencies(graph, batch));
  std::vector<Matching> finals(options.chains);
  auto run = [&](int c) {
    GlauberChain chain(graph, moves, DeriveChainSeed(options.seed, c));
    for (std::int64_t s = 0; s < burnin; ++s) chain.Sweep();
    for (std::int64_t s = 0; s < options.sweeps; ++s) {
      chain.Sweep();
      freq[c].Record(graph, chain.mates());
      if (c == 0 && on_sample) on_sample(chain);
    }
    finals[c] = chain.matching();
  };
  if (options.chains == 1) {
    run(0);
  } else {
    std::vector<std::thread> workers;
    for (int c = 0; c < options.chains; ++c) workers.emplace_back(run, c);
    for (auto& w : workers) w.join();
  }
  GlauberResult result{std::move(finals), std::move(freq[0])};
  for (int c = 1; c < options.chains; ++c) result.frequencies.Merge(freq[c]);
  return result;
}

}  // namespace tsscpp

#endif  // TSSCPP_SAMPLER_HPP_
