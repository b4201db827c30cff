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

#ifndef FAIRSPREAD_GRAPH_HPP_
#define FAIRSPREAD_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fairspread/errors.hpp"
#include "fairspread/rng.hpp"

namespace fairspread {

using VertexId = std::uint32_t;
using CommunityId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

struct Arc {
  VertexId tail;
  VertexId head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Immutable diffusion graph with a single propagation probability. An
// undirected edge is stored once and expands to two arcs.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges, bool directed, double p)
      : n_(n), edges_(std::move(edges)), directed_(directed), p_(p) {
    if (!(p_ >= 0.0 && p_ <= 1.0)) {
      throw InvalidArgument("propagation probability must lie in [0, 1], got " +
                            std::to_string(p_));
    }
    std::vector<Edge> keys;
    keys.reserve(edges_.size());
    for (const auto& [u, v] : edges_) {
      if (u >= n_ || v >= n_) {
        throw InvalidArgument("vertex id out of range: edge (" +
                              std::to_string(u) + ", " + std::to_string(v) +
                              ") with n = " + std::to_string(n_));
      }
      if (u == v) {
        throw InvalidArgument("self-loop at vertex " + std::to_string(u));
      }
      keys.push_back(directed_ ? Edge{u, v}
                               : Edge{std::min(u, v), std::max(u, v)});
    }
    std::sort(keys.begin(), keys.end());
    if (auto dup = std::adjacent_find(keys.begin(), keys.end());
        dup != keys.end()) {
      throw InvalidArgument("duplicate edge (" + std::to_string(dup->first) +
                            ", " + std::to_string(dup->second) + ")");
    }
    BuildAdjacency();
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_arcs() const { return heads_.size(); }
  bool directed() const { return directed_; }
  double p() const { return p_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    return {heads_.data() + offsets_[v], heads_.data() + offsets_[v + 1]};
  }

  // Arcs grouped by tail in ascending order; within a tail, in edge order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(heads_.size());
    for (VertexId v = 0; v < n_; ++v) {
      for (VertexId w : out_neighbors(v)) out.push_back({v, w});
    }
    return out;
  }

  Graph with_p(double p) const { return Graph(n_, edges_, directed_, p); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.p_ == b.p_ &&
           a.edges_ == b.edges_;
  }

 private:
  void BuildAdjacency() {
    offsets_.assign(n_ + 1, 0);
    for (const auto& [u, v] : edges_) {
      ++offsets_[u + 1];
      if (!directed_) ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    heads_.resize(offsets_[n_]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
      heads_[cursor[u]++] = v;
      if (!directed_) heads_[cursor[v]++] = u;
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  bool directed_ = false;
  double p_ = 0.0;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> heads_;
};

// Disjoint communities covering every vertex.
class CommunityPartition {
 public:
  CommunityPartition() = default;

  explicit CommunityPartition(std::vector<CommunityId> labels)
      : labels_(std::move(labels)) {
    CommunityId max_label = 0;
    for (CommunityId c : labels_) max_label = std::max(max_label, c);
    sizes_.assign(labels_.empty() ? 0 : max_label + 1, 0);
    for (CommunityId c : labels_) ++sizes_[c];
    for (std::size_t c = 0; c < sizes_.size(); ++c) {
      if (sizes_[c] == 0) {
        throw InvalidArgument("community " + std::to_string(c) +
                              " has no vertices");
      }
    }
  }

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_communities() const { return sizes_.size(); }
  CommunityId label(VertexId v) const { return labels_[v]; }
  const std::vector<CommunityId>& labels() const { return labels_; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t size(CommunityId c) const { return sizes_[c]; }

  std::vector<VertexId> members(CommunityId c) const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < labels_.size(); ++v) {
      if (labels_[v] == c) out.push_back(v);
    }
    return out;
  }

  friend bool operator==(const CommunityPartition&,
                         const CommunityPartition&) = default;

 private:
  std::vector<CommunityId> labels_;
  std::vector<std::size_t> sizes_;
};

struct LabeledGraph {
  Graph graph;
  CommunityPartition partition;
};

inline void check_compatible(const Graph& g, const CommunityPartition& part) {
  if (g.num_vertices() != part.num_vertices()) {
    throw InvalidArgument("community labels cover " +
                          std::to_string(part.num_vertices()) +
                          " vertices but the graph has " +
                          std::to_string(g.num_vertices()));
  }
}

// Sorted, duplicate-free seed vertices.
class SeedSet {
 public:
  SeedSet() = default;

  SeedSet(std::vector<VertexId> vertices, std::size_t n)
      : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) !=
        vertices_.end()) {
      throw InvalidArgument("seed set contains a repeated vertex");
    }
    if (!vertices_.empty() && vertices_.back() >= n) {
      throw InvalidArgument("invalid seed id " +
                            std::to_string(vertices_.back()) +
                            " for graph with " + std::to_string(n) +
                            " vertices");
    }
  }

  std::span<const VertexId> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  friend bool operator==(const SeedSet&, const SeedSet&) = default;

 private:
  std::vector<VertexId> vertices_;
};

// Stochastic block model parameters. `between` is symmetric; its diagonal is
// ignored.
struct SbmSpec {
  std::vector<std::size_t> community_sizes;
  std::vector<double> within_prob;
  std::vector<std::vector<double>> between_prob;

  static SbmSpec uniform_between(std::vector<std::size_t> sizes,
                                 std::vector<double> within, double between) {
    const std::size_t k = sizes.size();
    return {std::move(sizes), std::move(within),
            std::vector<std::vector<double>>(k, std::vector<double>(k, between))};
  }

  std::size_t num_vertices() const {
    std::size_t n = 0;
    for (auto s : community_sizes) n += s;
    return n;
  }

  void validate() const {
    const std::size_t k = community_sizes.size();
    if (k == 0) throw InvalidArgument("SBM needs at least one community");
    if (within_prob.size() != k) {
      throw InvalidArgument("SBM within_prob needs one entry per community");
    }
    if (between_prob.size() != k) {
      throw InvalidArgument("SBM between_prob must be a k x k matrix");
    }
    auto check_prob = [](double q) {
      if (!(q >= 0.0 && q <= 1.0)) {
        throw InvalidArgument("SBM probability outside [0, 1]: " +
                              std::to_string(q));
      }
    };
    for (std::size_t a = 0; a < k; ++a) {
      if (community_sizes[a] == 0) {
        throw InvalidArgument("SBM community sizes must be >= 1");
      }
      check_prob(within_prob[a]);
      if (between_prob[a].size() != k) {
        throw InvalidArgument("SBM between_prob must be a k x k matrix");
      }
      for (std::size_t b = 0; b < k; ++b) {
        check_prob(between_prob[a][b]);
        if (a != b && between_prob[a][b] != between_prob[b][a]) {
          throw InvalidArgument("SBM between_prob must be symmetric");
        }
      }
    }
  }
};

// Undirected simple graph; communities occupy contiguous id blocks in order.
// Every unordered pair is sampled once, in lexicographic order, from one
// stream seeded by `rng_seed`.
inline LabeledGraph generate_sbm(const SbmSpec& spec, std::uint64_t rng_seed,
                                 double p = 0.25) {
  spec.validate();
  const std::size_t n = spec.num_vertices();
  std::vector<CommunityId> labels;
  labels.reserve(n);
  for (CommunityId c = 0; c < spec.community_sizes.size(); ++c) {
    labels.insert(labels.end(), spec.community_sizes[c], c);
  }
  Rng rng(stream_seed(rng_seed, 0x5b3));
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const CommunityId a = labels[u];
      const CommunityId b = labels[v];
      const double q = a == b ? spec.within_prob[a] : spec.between_prob[a][b];
      if (rng.bernoulli(q)) edges.emplace_back(u, v);
    }
  }
  return {Graph(n, std::move(edges), false, p),
          CommunityPartition(std::move(labels))};
}

struct Subgraph {
  Graph graph;
  std::vector<VertexId> to_original;  // dense id -> id in the parent graph
};

// Vertices of community `c` and the edges with both endpoints inside it,
// densely renumbered in ascending original id.
inline Subgraph induced_within_community_subgraph(const Graph& g,
                                                  const CommunityPartition& part,
                                                  CommunityId c) {
  check_compatible(g, part);
  if (c >= part.num_communities()) {
    throw InvalidArgument("community id " + std::to_string(c) +
                          " out of range");
  }
  constexpr VertexId kAbsent = static_cast<VertexId>(-1);
  std::vector<VertexId> to_local(g.num_vertices(), kAbsent);
  std::vector<VertexId> to_original;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (part.label(v) == c) {
      to_local[v] = static_cast<VertexId>(to_original.size());
      to_original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (to_local[u] != kAbsent && to_local[v] != kAbsent) {
      edges.emplace_back(to_local[u], to_local[v]);
    }
  }
  return {Graph(to_original.size(), std::move(edges), g.directed(), g.p()),
          std::move(to_original)};
}

}  // namespace fairspread

#endif  // FAIRSPREAD_GRAPH_HPP_
