// Copyright 2026 The fairspread Authors.
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

#ifndef FAIRSPREAD_CASCADE_HPP_
#define FAIRSPREAD_CASCADE_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fairspread/errors.hpp"
#include "fairspread/graph.hpp"
#include "fairspread/parallel.hpp"
#include "fairspread/rng.hpp"
#include "fairspread/utility.hpp"

namespace fairspread {

inline constexpr std::size_t kDefaultSketches = 1000;
inline constexpr std::size_t kDefaultExactArcLimit = 20;
inline constexpr std::uint64_t kDefaultPrunedNodeLimit = std::uint64_t{1} << 24;

// Visited marks that reset in O(1) by bumping an epoch.
class VisitMarks {
 public:
  explicit VisitMarks(std::size_t n = 0) : stamp_(n, 0) {}

  void next() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  bool test_and_set(VertexId v) {
    if (stamp_[v] == epoch_) return false;
    stamp_[v] = epoch_;
    return true;
  }
  bool test(VertexId v) const { return stamp_[v] == epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

// One run of the independent cascade process. Returns the activated vertices
// in ascending order.
inline std::vector<VertexId> simulate_once(const Graph& g, const SeedSet& seeds,
                                           Rng& rng) {
  const std::size_t n = g.num_vertices();
  if (!seeds.empty() && seeds.vertices().back() >= n) {
    throw InvalidArgument("invalid seed id " +
                          std::to_string(seeds.vertices().back()));
  }
  std::vector<char> active(n, 0);
  std::vector<VertexId> frontier(seeds.vertices().begin(),
                                 seeds.vertices().end());
  for (VertexId s : frontier) active[s] = 1;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (VertexId w : g.out_neighbors(frontier[i])) {
      if (!active[w] && rng.bernoulli(g.p())) {
        active[w] = 1;
        frontier.push_back(w);
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (active[v]) out.push_back(v);
  }
  return out;
}

// R live-edge realizations of a graph. Sketch i keeps each arc independently
// with probability p, using the stream keyed by (master_seed, i).
class SketchSet {
 public:
  struct Sketch {
    std::vector<std::uint32_t> offsets;  // n + 1
    std::vector<VertexId> heads;

    std::span<const VertexId> out(VertexId v) const {
      return {heads.data() + offsets[v], heads.data() + offsets[v + 1]};
    }
  };

  SketchSet() = default;

  SketchSet(std::size_t n, std::uint64_t master_seed, std::size_t graph_arcs,
            std::vector<Sketch> sketches)
      : n_(n),
        master_seed_(master_seed),
        graph_arcs_(graph_arcs),
        sketches_(std::move(sketches)) {}

  std::size_t num_sketches() const { return sketches_.size(); }
  std::size_t num_vertices() const { return n_; }
  std::uint64_t master_seed() const { return master_seed_; }
  std::size_t graph_arcs() const { return graph_arcs_; }
  const Sketch& sketch(std::size_t i) const { return sketches_[i]; }

 private:
  std::size_t n_ = 0;
  std::uint64_t master_seed_ = 0;
  std::size_t graph_arcs_ = 0;
  std::vector<Sketch> sketches_;
};

inline SketchSet::Sketch sample_sketch(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  SketchSet::Sketch s;
  s.offsets.assign(n + 1, 0);
  Rng rng(seed);
  const double p = g.p();
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.out_neighbors(v)) {
      if (rng.bernoulli(p)) s.heads.push_back(w);
    }
    s.offsets[v + 1] = static_cast<std::uint32_t>(s.heads.size());
  }
  s.heads.shrink_to_fit();
  return s;
}

inline SketchSet sample_sketches(const Graph& g, std::size_t num_sketches,
                                 std::uint64_t master_seed,
                                 std::size_t threads = 1) {
  if (num_sketches == 0) throw InvalidArgument("sketch count must be >= 1");
  std::vector<SketchSet::Sketch> sketches(num_sketches);
  parallel_chunks(num_sketches, threads,
                  [&](std::size_t begin, std::size_t end, std::size_t) {
                    for (std::size_t i = begin; i < end; ++i) {
                      sketches[i] = sample_sketch(g, stream_seed(master_seed, i));
                    }
                  });
  return SketchSet(g.num_vertices(), master_seed, g.num_arcs(),
                   std::move(sketches));
}

namespace detail {

// Adds the vertices reachable from `seeds` in `sketch` to `counts` by label.
inline void accumulate_reach(const SketchSet::Sketch& sketch,
                             std::span<const VertexId> seeds,
                             const CommunityPartition& part, VisitMarks& marks,
                             std::vector<VertexId>& queue,
                             std::vector<std::int64_t>& counts) {
  marks.next();
  queue.clear();
  for (VertexId s : seeds) {
    if (marks.test_and_set(s)) queue.push_back(s);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (VertexId w : sketch.out(queue[i])) {
      if (marks.test_and_set(w)) queue.push_back(w);
    }
  }
  for (VertexId v : queue) ++counts[part.label(v)];
}

inline UtilityVector utilities_from_counts(std::span<const std::int64_t> counts,
                                           const CommunityPartition& part,
                                           double trials) {
  UtilityVector u;
  u.sizes = part.sizes();
  u.values.resize(counts.size());
  for (std::size_t c = 0; c < counts.size(); ++c) {
    u.values[c] = static_cast<double>(counts[c]) /
                  (trials * static_cast<double>(part.sizes()[c]));
  }
  return u;
}

}  // namespace detail

// Per-community reach counts summed over all sketches.
inline std::vector<std::int64_t> sketch_reach_counts(
    const SketchSet& sk, const SeedSet& seeds, const CommunityPartition& part,
    std::size_t threads = 1) {
  if (sk.num_vertices() != part.num_vertices()) {
    throw InvalidArgument("sketches cover " +
                          std::to_string(sk.num_vertices()) +
                          " vertices but the partition covers " +
                          std::to_string(part.num_vertices()));
  }
  if (!seeds.empty() && seeds.vertices().back() >= sk.num_vertices()) {
    throw InvalidArgument("invalid seed id " +
                          std::to_string(seeds.vertices().back()));
  }
  const std::size_t k = part.num_communities();
  threads = std::max<std::size_t>(1, std::min(threads, sk.num_sketches()));
  std::vector<std::vector<std::int64_t>> partial(
      threads, std::vector<std::int64_t>(k, 0));
  parallel_chunks(sk.num_sketches(), threads,
                  [&](std::size_t begin, std::size_t end, std::size_t w) {
                    VisitMarks marks(sk.num_vertices());
                    std::vector<VertexId> queue;
                    for (std::size_t i = begin; i < end; ++i) {
                      detail::accumulate_reach(sk.sketch(i), seeds.vertices(),
                                               part, marks, queue, partial[w]);
                    }
                  });
  std::vector<std::int64_t> counts(k, 0);
  for (const auto& p : partial) {
    for (std::size_t c = 0; c < k; ++c) counts[c] += p[c];
  }
  return counts;
}

// u_c = (1/R) sum over sketches of |reach(seeds) n V_c| / n_c. Integer counts
// are reduced before the single division, so the result does not depend on
// the thread count.
inline UtilityVector estimate_utilities(const SketchSet& sk,
                                        const SeedSet& seeds,
                                        const CommunityPartition& part,
                                        std::size_t threads = 1) {
  const auto counts = sketch_reach_counts(sk, seeds, part, threads);
  return detail::utilities_from_counts(
      counts, part, static_cast<double>(sk.num_sketches()));
}

// Community counts of the vertices reachable from `seeds` along all arcs.
inline std::vector<std::int64_t> reachable_counts(const Graph& g,
                                                  const SeedSet& seeds,
                                                  const CommunityPartition& part) {
  std::vector<char> active(g.num_vertices(), 0);
  std::vector<VertexId> queue(seeds.vertices().begin(), seeds.vertices().end());
  for (VertexId s : queue) active[s] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (VertexId w : g.out_neighbors(queue[i])) {
      if (!active[w]) {
        active[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::int64_t> counts(part.num_communities(), 0);
  for (VertexId v : queue) ++counts[part.label(v)];
  return counts;
}

// Exact per-community influenced counts when spread is deterministic
// (p = 0: the seeds only; p = 1: everything reachable).
inline std::vector<std::int64_t> exact_reach_counts(
    const Graph& g, const SeedSet& seeds, const CommunityPartition& part) {
  check_compatible(g, part);
  if (g.p() == 1.0) return reachable_counts(g, seeds, part);
  if (g.p() == 0.0) {
    std::vector<std::int64_t> counts(part.num_communities(), 0);
    for (VertexId s : seeds.vertices()) ++counts[part.label(s)];
    return counts;
  }
  throw InvalidArgument("exact reach counts need p in {0, 1}");
}

// Exact utilities by summing p^|S| (1-p)^(m-|S|) * coverage over every arc
// subset S. Deterministic spread (p in {0, 1}) uses direct reachability and
// has no size limit.
inline UtilityVector exact_utilities(const Graph& g, const SeedSet& seeds,
                                     const CommunityPartition& part,
                                     std::size_t arc_limit = kDefaultExactArcLimit) {
  check_compatible(g, part);
  if (!seeds.empty() && seeds.vertices().back() >= g.num_vertices()) {
    throw InvalidArgument("invalid seed id " +
                          std::to_string(seeds.vertices().back()));
  }
  if (g.p() == 0.0 || g.p() == 1.0) {
    return detail::utilities_from_counts(exact_reach_counts(g, seeds, part),
                                         part, 1.0);
  }
  const auto arcs = g.arcs();
  const std::size_t m = arcs.size();
  if (m > arc_limit) {
    throw LimitExceeded("exact enumeration over " + std::to_string(m) +
                        " arcs exceeds the limit of " +
                        std::to_string(arc_limit));
  }
  const double p = g.p();
  std::vector<double> live_pow(m + 1), dead_pow(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    live_pow[i] = std::pow(p, static_cast<double>(i));
    dead_pow[i] = std::pow(1.0 - p, static_cast<double>(i));
  }
  const std::size_t n = g.num_vertices();
  const std::size_t k = part.num_communities();
  std::vector<double> expected(k, 0.0);
  std::vector<char> active(n);
  std::vector<std::int64_t> counts(k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(active.begin(), active.end(), 0);
    for (VertexId s : seeds.vertices()) active[s] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < m; ++a) {
        if ((mask >> a & 1) && active[arcs[a].tail] && !active[arcs[a].head]) {
          active[arcs[a].head] = 1;
          changed = true;
        }
      }
    }
    std::fill(counts.begin(), counts.end(), 0);
    for (VertexId v = 0; v < n; ++v) {
      if (active[v]) ++counts[part.label(v)];
    }
    const auto live = static_cast<std::size_t>(std::popcount(mask));
    const double weight = live_pow[live] * dead_pow[m - live];
    for (std::size_t c = 0; c < k; ++c) {
      expected[c] += weight * static_cast<double>(counts[c]);
    }
  }
  UtilityVector u;
  u.sizes = part.sizes();
  u.values.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    u.values[c] = std::min(1.0, expected[c] / static_cast<double>(u.sizes[c]));
  }
  return u;
}

namespace detail {

// P(target is activated) by branching only on arcs that can still matter:
// an arc (a, b) with a active, b inactive and b able to reach the target
// through inactive vertices. Arcs that cannot matter are marginalized out.
class ActivationProbability {
 public:
  ActivationProbability(const Graph& g, std::uint64_t node_limit)
      : g_(g), arcs_(g.arcs()), node_limit_(node_limit) {
    const std::size_t n = g.num_vertices();
    in_offsets_.assign(n + 1, 0);
    for (const Arc& a : arcs_) ++in_offsets_[a.head + 1];
    for (std::size_t v = 0; v < n; ++v) in_offsets_[v + 1] += in_offsets_[v];
    in_tails_.resize(arcs_.size());
    std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
    for (const Arc& a : arcs_) in_tails_[cursor[a.head]++] = a.tail;
    active_.resize(n);
    decided_.resize(arcs_.size());
  }

  double operator()(std::span<const VertexId> seeds, VertexId target) {
    std::fill(active_.begin(), active_.end(), 0);
    std::fill(decided_.begin(), decided_.end(), 0);
    for (VertexId s : seeds) active_[s] = 1;
    target_ = target;
    return Recurse();
  }

  std::uint64_t nodes_visited() const { return nodes_; }

 private:
  double Recurse() {
    if (active_[target_]) return 1.0;
    if (++nodes_ > node_limit_) {
      throw LimitExceeded("pruned exact enumeration exceeded " +
                          std::to_string(node_limit_) + " branch nodes");
    }
    const std::vector<char> reaches = ReachesTarget();
    std::size_t pick = arcs_.size();
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
      if (!decided_[a] && active_[arcs_[a].tail] && !active_[arcs_[a].head] &&
          reaches[arcs_[a].head]) {
        pick = a;
        break;
      }
    }
    if (pick == arcs_.size()) return 0.0;
    decided_[pick] = 1;
    const double dead = Recurse();
    active_[arcs_[pick].head] = 1;
    const double live = Recurse();
    active_[arcs_[pick].head] = 0;
    decided_[pick] = 0;
    return g_.p() * live + (1.0 - g_.p()) * dead;
  }

  // Inactive vertices with a path to the target through inactive vertices.
  std::vector<char> ReachesTarget() const {
    std::vector<char> seen(active_.size(), 0);
    std::vector<VertexId> queue{target_};
    seen[target_] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const VertexId v = queue[i];
      for (std::size_t j = in_offsets_[v]; j < in_offsets_[v + 1]; ++j) {
        const VertexId u = in_tails_[j];
        if (!seen[u] && !active_[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      }
    }
    return seen;
  }

  const Graph& g_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> in_offsets_;
  std::vector<VertexId> in_tails_;
  std::vector<char> active_;
  std::vector<char> decided_;
  VertexId target_ = 0;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Exact utilities via per-vertex activation probabilities with lazy arc
// branching. Agrees with exact_utilities wherever both apply, and scales to
// sparse graphs (stars, trees) with far more arcs than full enumeration
// allows. `node_limit` caps the total number of branch nodes.
inline UtilityVector exact_utilities_pruned(
    const Graph& g, const SeedSet& seeds, const CommunityPartition& part,
    std::uint64_t node_limit = kDefaultPrunedNodeLimit) {
  check_compatible(g, part);
  if (!seeds.empty() && seeds.vertices().back() >= g.num_vertices()) {
    throw InvalidArgument("invalid seed id " +
                          std::to_string(seeds.vertices().back()));
  }
  if (g.p() == 0.0 || g.p() == 1.0) {
    return detail::utilities_from_counts(exact_reach_counts(g, seeds, part),
                                         part, 1.0);
  }
  detail::ActivationProbability prob(g, node_limit);
  std::vector<double> expected(part.num_communities(), 0.0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    expected[part.label(v)] += prob(seeds.vertices(), v);
  }
  UtilityVector u;
  u.sizes = part.sizes();
  u.values.resize(expected.size());
  for (std::size_t c = 0; c < expected.size(); ++c) {
    u.values[c] = std::min(1.0, expected[c] / static_cast<double>(u.sizes[c]));
  }
  return u;
}

}  // namespace fairspread

#endif  // FAIRSPREAD_CASCADE_HPP_
