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

// Shared generators for tests. Independent of the selection code.

#ifndef FAIRSPREAD_TESTS_TEST_UTIL_HPP_
#define FAIRSPREAD_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "fairspread/graph.hpp"
#include "fairspread/rng.hpp"

namespace fairspread::testing {

// Random simple graph whose arc count (undirected edges count twice) does not
// exceed `max_arcs`; labels are assigned round-robin so every community is
// non-empty.
inline LabeledGraph random_small_graph(Rng& rng, std::size_t n,
                                       std::size_t max_arcs,
                                       std::size_t communities, double p,
                                       bool directed) {
  std::set<Edge> keys;
  std::vector<Edge> edges;
  const std::size_t per_edge = directed ? 1 : 2;
  const std::size_t target_edges =
      1 + rng.below(std::max<std::size_t>(max_arcs / per_edge, 1));
  for (std::size_t attempt = 0; attempt < 200 && edges.size() < target_edges;
       ++attempt) {
    const auto u = static_cast<VertexId>(rng.below(n));
    const auto v = static_cast<VertexId>(rng.below(n));
    if (u == v) continue;
    const Edge key = directed ? Edge{u, v} : Edge{std::min(u, v), std::max(u, v)};
    if (!keys.insert(key).second) continue;
    edges.emplace_back(u, v);
  }
  std::vector<CommunityId> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    labels[v] = static_cast<CommunityId>(v % communities);
  }
  // Shuffle labels so communities are not striped by id.
  for (std::size_t i = n; i > 1; --i) {
    std::swap(labels[i - 1], labels[rng.below(i)]);
  }
  return {Graph(n, std::move(edges), directed, p),
          CommunityPartition(std::move(labels))};
}

// Exact utilities by direct enumeration of every arc subset, written without
// any library reachability code.
inline std::vector<double> reference_exact_utilities(
    const LabeledGraph& lg, const std::vector<VertexId>& seeds) {
  const Graph& g = lg.graph;
  const auto arcs = g.arcs();
  const std::size_t m = arcs.size();
  const std::size_t n = g.num_vertices();
  const double p = g.p();
  std::vector<double> expected(lg.partition.num_communities(), 0.0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    double weight = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      weight *= (mask >> i & 1) ? p : 1.0 - p;
    }
    if (weight == 0.0) continue;
    std::vector<bool> on(n, false);
    for (VertexId s : seeds) on[s] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < m; ++i) {
        if ((mask >> i & 1) && on[arcs[i].tail] && !on[arcs[i].head]) {
          on[arcs[i].head] = true;
          grew = true;
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (on[v]) expected[lg.partition.label(static_cast<VertexId>(v))] += weight;
    }
  }
  for (std::size_t c = 0; c < expected.size(); ++c) {
    expected[c] /= static_cast<double>(lg.partition.size(static_cast<CommunityId>(c)));
  }
  return expected;
}

inline std::vector<VertexId> random_subset(Rng& rng, std::size_t n,
                                           std::size_t k) {
  std::vector<VertexId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<VertexId>(i);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(all[i], all[i + rng.below(n - i)]);
  }
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace fairspread::testing

#endif  // FAIRSPREAD_TESTS_TEST_UTIL_HPP_
