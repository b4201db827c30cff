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

#ifndef FAIRSPREAD_SATURATE_HPP_
#define FAIRSPREAD_SATURATE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fairspread/cascade.hpp"
#include "fairspread/coverage.hpp"
#include "fairspread/errors.hpp"
#include "fairspread/graph.hpp"
#include "fairspread/greedy.hpp"
#include "fairspread/objectives.hpp"
#include "fairspread/rng.hpp"

namespace fairspread {

inline constexpr double kDefaultSaturateTolerance = 1e-3;

struct MaximinResult {
  Selection selection;
  double gamma_target = 0.0;  // largest gamma the truncated greedy reached
  double gamma = 0.0;         // achieved min_c u_c of the returned seeds
};

struct DcBounds {
  std::vector<double> values;         // U_c
  std::vector<std::size_t> budgets;   // floor(k n_c / n)
};

struct DcResult {
  Selection selection;
  bool feasible = false;
  std::vector<double> slack;  // u_c - U_c
  std::size_t saturating_seeds = 0;  // seeds placed before the bounds were met
};

namespace detail {

inline void check_tolerance(double tol) {
  if (!(tol > 0.0 && tol < 1.0)) {
    throw InvalidArgument("saturation tolerance must lie in (0, 1)");
  }
}

// Re-adds `chosen` to a fresh state and spends the rest of the budget on
// total spread. The trace records `progress` after every seed.
template <class Progress>
Selection finish_with_total_spread(const CoverageOracle& oracle,
                                   const std::vector<VertexId>& chosen,
                                   std::size_t k, std::size_t evaluations,
                                   Progress&& progress) {
  CoverageState state(oracle);
  Selection out;
  out.trace.evaluations = evaluations;
  for (VertexId v : chosen) {
    state.add(v);
    out.trace.chosen.push_back(v);
    out.trace.objective_after_each.push_back(progress(state.counts()));
  }
  if (chosen.size() < k) {
    SelectionTrace fill;
    lazy_greedy_extend(state, TotalInfluenceObjective(oracle),
                       k - chosen.size(), fill);
    out.trace.evaluations += fill.evaluations;
    CoverageState replay(oracle);
    for (VertexId v : chosen) replay.add(v);
    for (VertexId v : fill.chosen) {
      replay.add(v);
      out.trace.chosen.push_back(v);
      out.trace.objective_after_each.push_back(progress(replay.counts()));
    }
  }
  out.seeds = state.seed_set();
  out.utilities = oracle.utilities_of(state.counts());
  return out;
}

}  // namespace detail

// Maximin selection in the SATURATE style: binary search on gamma in [0, 1];
// for each gamma, greedily maximize sum_c min(u_c, gamma) under budget k and
// call gamma reachable when the truncated value is within `tol` of
// N_C * gamma. Leftover budget goes to total spread.
inline MaximinResult saturate_maximin(const CoverageOracle& oracle,
                                      std::size_t k,
                                      double tol = kDefaultSaturateTolerance) {
  detail::check_budget(k, oracle.num_vertices());
  detail::check_tolerance(tol);
  const double groups = static_cast<double>(oracle.num_communities());
  std::size_t evaluations = 0;
  double lo = 0.0;
  double hi = 1.0;
  std::vector<VertexId> best;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const TruncatedCoverageObjective obj(oracle, mid);
    CoverageState state(oracle);
    SelectionTrace trace;
    lazy_greedy_extend(state, obj, k, trace, {.stop_at_zero_gain = true});
    evaluations += trace.evaluations;
    if (objective_value(obj, state.counts()) >= groups * mid - tol) {
      lo = mid;
      best = state.chosen();
    } else {
      hi = mid;
    }
  }
  MaximinResult out;
  out.gamma_target = lo;
  const CountScale scale(oracle);
  out.selection = detail::finish_with_total_spread(
      oracle, best, k, evaluations, [&](std::span<const std::int64_t> counts) {
        double m = 1.0;
        for (std::size_t c = 0; c < counts.size(); ++c) {
          m = std::min(m, scale.utility(c, counts[c]));
        }
        return m;
      });
  out.gamma = min_utility(out.selection.utilities);
  return out;
}

inline MaximinResult saturate_maximin(const SketchSet& sk,
                                      const CommunityPartition& part,
                                      std::size_t k,
                                      double tol = kDefaultSaturateTolerance,
                                      std::size_t threads = 1) {
  CoverageOracle oracle(sk, part, threads);
  return saturate_maximin(oracle, k, tol);
}

// U_c: utility community c reaches when it receives floor(k n_c / n) seeds
// and spreads them inside its own induced subgraph, estimated by the
// utilitarian greedy on sketches keyed by (master_seed, c).
inline DcBounds dc_lower_bounds(const Graph& g, const CommunityPartition& part,
                                std::size_t k, std::size_t num_sketches,
                                std::uint64_t master_seed,
                                std::size_t threads = 1) {
  check_compatible(g, part);
  detail::check_budget(k, g.num_vertices());
  const std::size_t n = g.num_vertices();
  DcBounds out;
  for (CommunityId c = 0; c < part.num_communities(); ++c) {
    const std::size_t budget = k * part.size(c) / n;
    out.budgets.push_back(budget);
    if (budget == 0) {
      out.values.push_back(0.0);
      continue;
    }
    const Subgraph sub = induced_within_community_subgraph(g, part, c);
    const CommunityPartition whole(
        std::vector<CommunityId>(sub.graph.num_vertices(), 0));
    const SketchSet sk = sample_sketches(sub.graph, num_sketches,
                                         stream_seed(master_seed, 0xdc, c),
                                         threads);
    const Selection sel = greedy_utilitarian(sk, whole, budget, threads);
    out.values.push_back(sel.utilities.values[0]);
  }
  return out;
}

// Diversity-constraint selection: greedily maximize sum_c min(u_c / U_c, 1)
// until every bound is met (or the budget runs out), then spend what is left
// on total spread. Feasible iff u_c >= U_c - tol for every community.
inline DcResult saturate_dc(const CoverageOracle& oracle, std::size_t k,
                            const DcBounds& bounds,
                            double tol = kDefaultSaturateTolerance) {
  detail::check_budget(k, oracle.num_vertices());
  detail::check_tolerance(tol);
  if (bounds.values.size() != oracle.num_communities()) {
    throw InvalidArgument("DC bounds need one value per community");
  }
  const NormalizedBoundObjective obj(oracle, bounds.values);
  CoverageState state(oracle);
  SelectionTrace trace;
  lazy_greedy_extend(state, obj, k, trace, {.stop_at_zero_gain = true});
  DcResult out;
  out.saturating_seeds = state.chosen().size();
  out.selection = detail::finish_with_total_spread(
      oracle, state.chosen(), k, trace.evaluations,
      [&](std::span<const std::int64_t> counts) {
        return objective_value(obj, counts);
      });
  out.feasible = true;
  for (std::size_t c = 0; c < bounds.values.size(); ++c) {
    const double slack = out.selection.utilities.values[c] - bounds.values[c];
    out.slack.push_back(slack);
    if (slack < -tol) out.feasible = false;
  }
  return out;
}

inline DcResult saturate_dc(const SketchSet& sk, const CommunityPartition& part,
                            std::size_t k, const DcBounds& bounds,
                            double tol = kDefaultSaturateTolerance,
                            std::size_t threads = 1) {
  CoverageOracle oracle(sk, part, threads);
  return saturate_dc(oracle, k, bounds, tol);
}

}  // namespace fairspread

#endif  // FAIRSPREAD_SATURATE_HPP_
