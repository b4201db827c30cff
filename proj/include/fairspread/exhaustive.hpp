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

#ifndef FAIRSPREAD_EXHAUSTIVE_HPP_
#define FAIRSPREAD_EXHAUSTIVE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fairspread/cascade.hpp"
#include "fairspread/coverage.hpp"
#include "fairspread/errors.hpp"
#include "fairspread/graph.hpp"
#include "fairspread/welfare.hpp"

namespace fairspread {

inline constexpr std::uint64_t kDefaultExhaustiveLimit = 2'000'000;

enum class ObjectiveKind { kTotal, kWelfare, kMaximin };

inline double objective_of(ObjectiveKind kind, const UtilityVector& u,
                           const WelfareParams& params) {
  switch (kind) {
    case ObjectiveKind::kTotal:
      return total_influence(u);
    case ObjectiveKind::kWelfare:
      return welfare(u, params);
    case ObjectiveKind::kMaximin:
      return min_utility(u);
  }
  return 0.0;
}

// C(n, k), saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t a = r / g;
    const std::uint64_t b = num / (i / g);
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = a * b;
  }
  return r;
}

struct ExhaustiveResult {
  SeedSet seeds;
  double value = 0.0;
  UtilityVector utilities;
  std::uint64_t sets_evaluated = 0;
};

// Calls fn(span of sorted vertex ids) for every k-subset of {0..n-1} in
// lexicographic order.
template <class Fn>
void for_each_k_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<VertexId> idx(k);
  std::iota(idx.begin(), idx.end(), VertexId{0});
  while (true) {
    fn(std::span<const VertexId>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void check_enumeration(std::size_t n, std::size_t k,
                              std::uint64_t limit) {
  if (k > n) {
    throw InvalidArgument("budget k = " + std::to_string(k) +
                          " exceeds the number of vertices " +
                          std::to_string(n));
  }
  const std::uint64_t count = binomial(n, k);
  if (count > limit) {
    throw LimitExceeded("C(" + std::to_string(n) + ", " + std::to_string(k) +
                        ") = " + std::to_string(count) +
                        " seed sets exceeds the limit of " +
                        std::to_string(limit));
  }
}

// Enumerates every k-subset of {0..n-1} in lexicographic order and keeps the
// first maximizer. `evaluate` maps a sorted seed list to utilities.
template <class Evaluate>
ExhaustiveResult exhaustive_opt(std::size_t n, std::size_t k,
                                ObjectiveKind kind, const WelfareParams& params,
                                Evaluate&& evaluate,
                                std::uint64_t limit = kDefaultExhaustiveLimit) {
  check_enumeration(n, k, limit);
  ExhaustiveResult best;
  bool have = false;
  for_each_k_subset(n, k, [&](std::span<const VertexId> seeds) {
    UtilityVector u = evaluate(seeds);
    const double value = objective_of(kind, u, params);
    ++best.sets_evaluated;
    if (!have || value > best.value) {
      have = true;
      best.value = value;
      best.seeds = SeedSet({seeds.begin(), seeds.end()}, n);
      best.utilities = std::move(u);
    }
  });
  return best;
}

// Exhaustive optimum over exact utilities.
inline ExhaustiveResult exhaustive_opt_exact(
    const Graph& g, const CommunityPartition& part, std::size_t k,
    ObjectiveKind kind, const WelfareParams& params,
    std::uint64_t limit = kDefaultExhaustiveLimit) {
  check_compatible(g, part);
  return exhaustive_opt(
      g.num_vertices(), k, kind, params,
      [&](std::span<const VertexId> seeds) {
        return exact_utilities_pruned(
            g, SeedSet({seeds.begin(), seeds.end()}, g.num_vertices()), part);
      },
      limit);
}

// Exhaustive optimum over the sketch estimates held by `oracle`.
inline ExhaustiveResult exhaustive_opt_sketch(
    const CoverageOracle& oracle, std::size_t k, ObjectiveKind kind,
    const WelfareParams& params, std::uint64_t limit = kDefaultExhaustiveLimit) {
  const std::size_t n = oracle.num_vertices();
  return exhaustive_opt(
      n, k, kind, params,
      [&](std::span<const VertexId> seeds) {
        return oracle.utilities_of(
            oracle.counts_of(SeedSet({seeds.begin(), seeds.end()}, n)));
      },
      limit);
}

}  // namespace fairspread

#endif  // FAIRSPREAD_EXHAUSTIVE_HPP_
