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

#ifndef FAIRSPREAD_GREEDY_HPP_
#define FAIRSPREAD_GREEDY_HPP_

#include <cstddef>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "fairspread/coverage.hpp"
#include "fairspread/errors.hpp"
#include "fairspread/objectives.hpp"
#include "fairspread/welfare.hpp"

namespace fairspread {

struct SelectionTrace {
  std::vector<VertexId> chosen;
  std::vector<double> objective_after_each;
  std::size_t evaluations = 0;
};

struct Selection {
  SeedSet seeds;
  SelectionTrace trace;
  UtilityVector utilities;
};

struct GreedyOptions {
  // Stop before taking a step whose best marginal gain is <= 0.
  bool stop_at_zero_gain = false;
};

namespace detail {

struct Candidate {
  double gain;
  VertexId vertex;
  std::size_t round;  // number of seeds chosen when `gain` was computed
};

// Max-heap order: larger gain first, then lower vertex id.
struct CandidateLess {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.vertex > b.vertex;
  }
};

inline void check_budget(std::size_t k, std::size_t n) {
  if (k > n) {
    throw InvalidArgument("budget k = " + std::to_string(k) +
                          " exceeds the number of vertices " +
                          std::to_string(n));
  }
}

}  // namespace detail

// Lazy (CELF) greedy: adds up to `steps` vertices to `state`, each time the
// candidate with the largest marginal gain, lowest id on ties. Cached gains
// are upper bounds for a submodular objective, so a candidate whose gain is
// fresh for the current round and still on top is the exact argmax.
template <CountObjective Objective>
void lazy_greedy_extend(CoverageState& state, const Objective& obj,
                        std::size_t steps, SelectionTrace& trace,
                        GreedyOptions options = {}) {
  const CoverageOracle& oracle = state.oracle();
  const std::size_t n = oracle.num_vertices();
  const std::size_t k = oracle.num_communities();
  std::vector<std::int64_t> delta(k);
  std::priority_queue<detail::Candidate, std::vector<detail::Candidate>,
                      detail::CandidateLess>
      queue;
  std::size_t round = state.chosen().size();
  const bool fresh_start = state.empty();
  for (VertexId v = 0; v < n; ++v) {
    if (state.contains(v)) continue;
    double gain;
    if (fresh_start) {
      gain = objective_gain(obj, state.counts(), oracle.singleton_counts(v));
    } else {
      state.marginal(v, delta);
      gain = objective_gain(obj, state.counts(), delta);
    }
    ++trace.evaluations;
    queue.push({gain, v, round});
  }
  for (std::size_t step = 0; step < steps && !queue.empty(); ++step) {
    while (true) {
      detail::Candidate top = queue.top();
      queue.pop();
      if (top.round == round) {
        if (options.stop_at_zero_gain && top.gain <= 0.0) return;
        state.add(top.vertex);
        ++round;
        trace.chosen.push_back(top.vertex);
        trace.objective_after_each.push_back(
            objective_value(obj, state.counts()));
        break;
      }
      state.marginal(top.vertex, delta);
      ++trace.evaluations;
      top.gain = objective_gain(obj, state.counts(), delta);
      top.round = round;
      queue.push(top);
    }
  }
}

// Reference greedy that re-evaluates every candidate at every step.
template <CountObjective Objective>
void naive_greedy_extend(CoverageState& state, const Objective& obj,
                         std::size_t steps, SelectionTrace& trace,
                         GreedyOptions options = {}) {
  const CoverageOracle& oracle = state.oracle();
  std::vector<std::int64_t> delta(oracle.num_communities());
  for (std::size_t step = 0; step < steps; ++step) {
    bool found = false;
    double best_gain = 0.0;
    VertexId best = 0;
    for (VertexId v = 0; v < oracle.num_vertices(); ++v) {
      if (state.contains(v)) continue;
      state.marginal(v, delta);
      ++trace.evaluations;
      const double gain = objective_gain(obj, state.counts(), delta);
      if (!found || gain > best_gain) {
        found = true;
        best_gain = gain;
        best = v;
      }
    }
    if (!found) return;
    if (options.stop_at_zero_gain && best_gain <= 0.0) return;
    state.add(best);
    trace.chosen.push_back(best);
    trace.objective_after_each.push_back(objective_value(obj, state.counts()));
  }
}

template <CountObjective Objective>
Selection greedy_select(const CoverageOracle& oracle, std::size_t k,
                        const Objective& obj) {
  detail::check_budget(k, oracle.num_vertices());
  CoverageState state(oracle);
  Selection out;
  lazy_greedy_extend(state, obj, k, out.trace);
  out.seeds = state.seed_set();
  out.utilities = oracle.utilities_of(state.counts());
  return out;
}

// Maximizes sum_c n_c g_alpha(u_c) over sketch-estimated utilities.
inline Selection greedy_welfare(const CoverageOracle& oracle, std::size_t k,
                                const WelfareParams& params) {
  return greedy_select(oracle, k, WelfareObjective(oracle, params));
}

inline Selection greedy_welfare(const SketchSet& sk,
                                const CommunityPartition& part, std::size_t k,
                                const WelfareParams& params,
                                std::size_t threads = 1) {
  CoverageOracle oracle(sk, part, threads);
  return greedy_welfare(oracle, k, params);
}

// Maximizes the expected total spread sum_c n_c u_c.
inline Selection greedy_utilitarian(const CoverageOracle& oracle,
                                    std::size_t k) {
  return greedy_select(oracle, k, TotalInfluenceObjective(oracle));
}

inline Selection greedy_utilitarian(const SketchSet& sk,
                                    const CommunityPartition& part,
                                    std::size_t k, std::size_t threads = 1) {
  CoverageOracle oracle(sk, part, threads);
  return greedy_utilitarian(oracle, k);
}

}  // namespace fairspread

#endif  // FAIRSPREAD_GREEDY_HPP_
