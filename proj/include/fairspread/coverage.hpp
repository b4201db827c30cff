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

#ifndef FAIRSPREAD_COVERAGE_HPP_
#define FAIRSPREAD_COVERAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fairspread/cascade.hpp"
#include "fairspread/errors.hpp"
#include "fairspread/graph.hpp"
#include "fairspread/parallel.hpp"

namespace fairspread {

// Shared, read-mostly view of a SketchSet for set-function evaluation.
// Per-community reach counts are summed over sketches; an objective turns
// them into a value. The singleton cache is built on first use and is not
// safe to build concurrently; call singleton_counts() once before sharing.
class CoverageOracle {
 public:
  CoverageOracle(const SketchSet& sk, const CommunityPartition& part,
                 std::size_t threads = 1)
      : sk_(sk), part_(part), threads_(std::max<std::size_t>(threads, 1)) {
    if (sk.num_vertices() != part.num_vertices()) {
      throw InvalidArgument("sketches cover " +
                            std::to_string(sk.num_vertices()) +
                            " vertices but the partition covers " +
                            std::to_string(part.num_vertices()));
    }
  }

  const SketchSet& sketches() const { return sk_; }
  const CommunityPartition& partition() const { return part_; }
  std::size_t num_vertices() const { return sk_.num_vertices(); }
  std::size_t num_communities() const { return part_.num_communities(); }
  std::size_t num_sketches() const { return sk_.num_sketches(); }
  std::size_t threads() const { return threads_; }

  std::vector<std::int64_t> counts_of(const SeedSet& seeds) const {
    return sketch_reach_counts(sk_, seeds, part_, threads_);
  }

  UtilityVector utilities_of(std::span<const std::int64_t> counts) const {
    return detail::utilities_from_counts(
        counts, part_, static_cast<double>(sk_.num_sketches()));
  }

  // Row v holds the per-community counts reached from {v} alone.
  std::span<const std::int64_t> singleton_counts(VertexId v) const {
    if (singletons_.empty()) BuildSingletons();
    const std::size_t k = num_communities();
    return {singletons_.data() + v * k, k};
  }

 private:
  void BuildSingletons() const {
    const std::size_t n = num_vertices();
    const std::size_t k = num_communities();
    std::vector<std::int64_t> table(n * k, 0);
    parallel_chunks(n, threads_,
                    [&](std::size_t begin, std::size_t end, std::size_t) {
                      VisitMarks marks(n);
                      std::vector<VertexId> queue;
                      std::vector<std::int64_t> counts(k);
                      for (std::size_t v = begin; v < end; ++v) {
                        std::fill(counts.begin(), counts.end(), 0);
                        const VertexId seed[] = {static_cast<VertexId>(v)};
                        for (std::size_t i = 0; i < sk_.num_sketches(); ++i) {
                          detail::accumulate_reach(sk_.sketch(i), seed, part_,
                                                   marks, queue, counts);
                        }
                        std::copy(counts.begin(), counts.end(),
                                  table.begin() + static_cast<std::ptrdiff_t>(v * k));
                      }
                    });
    singletons_ = std::move(table);
  }

  const SketchSet& sk_;
  const CommunityPartition& part_;
  std::size_t threads_;
  mutable std::vector<std::int64_t> singletons_;
};

// Incremental coverage of a growing seed set: which (sketch, vertex) pairs
// are already reached, and the resulting per-community counts.
class CoverageState {
 public:
  explicit CoverageState(const CoverageOracle& oracle)
      : oracle_(oracle),
        n_(oracle.num_vertices()),
        covered_(oracle.num_sketches() * oracle.num_vertices(), 0),
        counts_(oracle.num_communities(), 0),
        in_set_(oracle.num_vertices(), 0),
        scratch_(std::max<std::size_t>(oracle.threads(), 1)) {
    for (auto& s : scratch_) s.marks = VisitMarks(n_);
  }

  const CoverageOracle& oracle() const { return oracle_; }
  std::span<const std::int64_t> counts() const { return counts_; }
  const std::vector<VertexId>& chosen() const { return chosen_; }
  bool contains(VertexId v) const { return in_set_[v] != 0; }
  bool empty() const { return chosen_.empty(); }

  // Per-community count increase from adding v, written to `delta`.
  void marginal(VertexId v, std::span<std::int64_t> delta) const {
    const std::size_t k = counts_.size();
    std::fill(delta.begin(), delta.end(), 0);
    if (in_set_[v]) return;
    const std::size_t workers = scratch_.size();
    if (workers == 1) {
      Explore(v, 0, oracle_.num_sketches(), scratch_[0], delta, false);
      return;
    }
    std::vector<std::vector<std::int64_t>> partial(
        workers, std::vector<std::int64_t>(k, 0));
    parallel_chunks(oracle_.num_sketches(), workers,
                    [&](std::size_t begin, std::size_t end, std::size_t w) {
                      Explore(v, begin, end, scratch_[w], partial[w], false);
                    });
    for (const auto& p : partial) {
      for (std::size_t c = 0; c < k; ++c) delta[c] += p[c];
    }
  }

  void add(VertexId v) {
    if (v >= n_) throw InvalidArgument("invalid seed id " + std::to_string(v));
    if (in_set_[v]) return;
    std::vector<std::int64_t> delta(counts_.size(), 0);
    Explore(v, 0, oracle_.num_sketches(), scratch_[0], delta, true);
    for (std::size_t c = 0; c < counts_.size(); ++c) counts_[c] += delta[c];
    in_set_[v] = 1;
    chosen_.push_back(v);
  }

  SeedSet seed_set() const { return SeedSet(chosen_, n_); }

 private:
  struct Scratch {
    VisitMarks marks;
    std::vector<VertexId> queue;
  };

  template <class Counts>
  void Explore(VertexId v, std::size_t begin, std::size_t end, Scratch& s,
               Counts& delta, bool commit) const {
    const auto& part = oracle_.partition();
    const auto& sk = oracle_.sketches();
    for (std::size_t i = begin; i < end; ++i) {
      std::uint8_t* row = covered_.data() + i * n_;
      if (row[v]) continue;
      s.marks.next();
      s.queue.clear();
      s.queue.push_back(v);
      s.marks.test_and_set(v);
      const auto& sketch = sk.sketch(i);
      for (std::size_t q = 0; q < s.queue.size(); ++q) {
        for (VertexId w : sketch.out(s.queue[q])) {
          if (!row[w] && s.marks.test_and_set(w)) s.queue.push_back(w);
        }
      }
      for (VertexId w : s.queue) {
        ++delta[part.label(w)];
        if (commit) row[w] = 1;
      }
    }
  }

  const CoverageOracle& oracle_;
  std::size_t n_;
  mutable std::vector<std::uint8_t> covered_;
  std::vector<std::int64_t> counts_;
  std::vector<std::uint8_t> in_set_;
  std::vector<VertexId> chosen_;
  mutable std::vector<Scratch> scratch_;
};

}  // namespace fairspread

#endif  // FAIRSPREAD_COVERAGE_HPP_
