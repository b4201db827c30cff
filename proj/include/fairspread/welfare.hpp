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

#ifndef FAIRSPREAD_WELFARE_HPP_
#define FAIRSPREAD_WELFARE_HPP_

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "fairspread/errors.hpp"
#include "fairspread/utility.hpp"

namespace fairspread {

// Slack for boundary comparisons between utilities computed along different
// floating-point paths (e.g. 0.8 - 0.3 versus 0.5).
inline constexpr double kCompareTolerance = 1e-12;

// Isoelastic welfare parameters. The floor only applies when alpha <= 0,
// where the per-community term diverges at zero utility; for alpha in (0, 1)
// the term is finite at zero and left unfloored.
struct WelfareParams {
  double alpha = 0.0;
  double epsilon = 1e-3;

  void validate() const {
    if (!(alpha < 1.0) || !std::isfinite(alpha)) {
      throw InvalidArgument("alpha must be finite and < 1, got " +
                            std::to_string(alpha));
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
      throw InvalidArgument("epsilon must lie in (0, 1), got " +
                            std::to_string(epsilon));
    }
  }

  // 1/(2n): below the smallest positive utility of a seeded community.
  static WelfareParams for_graph(double alpha, std::size_t n) {
    return {alpha, 0.5 / static_cast<double>(std::max<std::size_t>(n, 1))};
  }

  // 1/(2Rn): below the smallest positive sketch estimate 1/(R n_c).
  static WelfareParams for_sketches(double alpha, std::size_t sketches,
                                    std::size_t n) {
    return {alpha, 0.5 / (static_cast<double>(std::max<std::size_t>(sketches, 1)) *
                          static_cast<double>(std::max<std::size_t>(n, 1)))};
  }
};

// n_c * g(u) with g(x) = x^alpha / alpha, or log x at alpha = 0.
inline double welfare_term(double u, std::size_t size,
                           const WelfareParams& params) {
  const double x = params.alpha <= 0.0 ? std::max(u, params.epsilon) : u;
  const double g =
      params.alpha == 0.0 ? std::log(x) : std::pow(x, params.alpha) / params.alpha;
  return static_cast<double>(size) * g;
}

inline double welfare(const UtilityVector& u, const WelfareParams& params) {
  u.validate();
  params.validate();
  double w = 0.0;
  for (std::size_t c = 0; c < u.values.size(); ++c) {
    w += welfare_term(u.values[c], u.sizes[c], params);
  }
  return w;
}

inline double total_influence(const UtilityVector& u) {
  double t = 0.0;
  for (std::size_t c = 0; c < u.values.size(); ++c) {
    t += static_cast<double>(u.sizes[c]) * u.values[c];
  }
  return t;
}

inline double min_utility(const UtilityVector& u) {
  return u.values.empty() ? 0.0
                          : *std::min_element(u.values.begin(), u.values.end());
}

inline double utility_gap(const UtilityVector& u) {
  if (u.values.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(u.values.begin(), u.values.end());
  return *hi - *lo;
}

// Price of fairness 1 - fair/im, clamped to [0, 1] so that a fair run
// marginally beating the unconstrained greedy on the same sketches reads 0.
inline double pof(double fair_total, double im_total) {
  if (!(im_total > 0.0)) {
    throw InvalidArgument("price of fairness needs a positive reference total");
  }
  return std::clamp(1.0 - fair_total / im_total, 0.0, 1.0);
}

inline bool dp_satisfied(const UtilityVector& u, double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw InvalidArgument("DP tolerance must lie in [0, 1)");
  }
  return utility_gap(u) <= delta + kCompareTolerance;
}

// Lexicographic comparison of ascending-sorted utilities; greater means the
// first vector is leximin-preferred. Entries within `tol` compare equal.
inline std::strong_ordering leximin_compare(const UtilityVector& u,
                                            const UtilityVector& v,
                                            double tol = kCompareTolerance) {
  if (u.values.size() != v.values.size()) {
    throw InvalidArgument("leximin comparison needs equal community counts");
  }
  std::vector<double> a = u.values;
  std::vector<double> b = v.values;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i] + tol) return std::strong_ordering::greater;
    if (b[i] > a[i] + tol) return std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

enum class Preference { kNone, kFirst, kSecond };

inline const char* to_string(Preference p) {
  switch (p) {
    case Preference::kFirst:
      return "first";
    case Preference::kSecond:
      return "second";
    default:
      return "none";
  }
}

struct PrincipleVerdict {
  bool applicable = false;
  Preference preferred = Preference::kNone;

  static PrincipleVerdict prefers(Preference p) { return {true, p}; }
  friend bool operator==(const PrincipleVerdict&,
                         const PrincipleVerdict&) = default;
};

namespace detail {

inline void check_same_shape(const UtilityVector& u, const UtilityVector& v) {
  u.validate();
  v.validate();
  if (u.values.size() != v.values.size()) {
    throw InvalidArgument("utility vectors differ in community count");
  }
  if (u.sizes != v.sizes) {
    throw InvalidArgument("utility vectors differ in community sizes");
  }
}

// True when `to` improves on `from` under the influence transfer premise,
// given an order that ascending-sorts both vectors.
inline bool transfer_improves(const UtilityVector& from, const UtilityVector& to,
                              const std::vector<std::size_t>& order) {
  double prefix = 0.0;
  bool strict = false;
  for (std::size_t c : order) {
    prefix += static_cast<double>(from.sizes[c]) * (to.values[c] - from.values[c]);
    if (prefix < -kCompareTolerance) return false;
    if (to.values[c] > from.values[c] + kCompareTolerance) strict = true;
  }
  return strict;
}

}  // namespace detail

// Influence transfer: with both vectors sorted by one shared community order,
// the lower-utility prefix sums of n_c (v_c - u_c) stay non-negative and some
// community strictly improves. No shared order means not applicable.
inline PrincipleVerdict check_influence_transfer(const UtilityVector& u,
                                                 const UtilityVector& v) {
  detail::check_same_shape(u, v);
  std::vector<std::size_t> order(u.values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (u.values[a] != u.values[b]) return u.values[a] < u.values[b];
    if (v.values[a] != v.values[b]) return v.values[a] < v.values[b];
    return a < b;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (v.values[order[i]] < v.values[order[i - 1]]) return {};
  }
  if (detail::transfer_improves(u, v, order)) {
    return PrincipleVerdict::prefers(Preference::kSecond);
  }
  if (detail::transfer_improves(v, u, order)) {
    return PrincipleVerdict::prefers(Preference::kFirst);
  }
  return {};
}

// Utility gap reduction: prefer the vector with at least the other's total
// and a strictly smaller gap.
inline PrincipleVerdict check_gap_reduction(const UtilityVector& u,
                                            const UtilityVector& v) {
  detail::check_same_shape(u, v);
  const double tu = total_influence(u);
  const double tv = total_influence(v);
  const double slack = kCompareTolerance * std::max({1.0, tu, tv});
  const double gu = utility_gap(u);
  const double gv = utility_gap(v);
  if (tv >= tu - slack && gu > gv + kCompareTolerance) {
    return PrincipleVerdict::prefers(Preference::kSecond);
  }
  if (tu >= tv - slack && gv > gu + kCompareTolerance) {
    return PrincipleVerdict::prefers(Preference::kFirst);
  }
  return {};
}

// Pareto dominance: weakly better everywhere and strictly better somewhere.
inline PrincipleVerdict check_monotonicity_preference(const UtilityVector& u,
                                                      const UtilityVector& v) {
  if (u.values.size() != v.values.size()) {
    throw InvalidArgument("utility vectors differ in community count");
  }
  bool u_ge = true, v_ge = true, u_gt = false, v_gt = false;
  for (std::size_t c = 0; c < u.values.size(); ++c) {
    if (u.values[c] < v.values[c]) {
      u_ge = false;
      v_gt = true;
    } else if (u.values[c] > v.values[c]) {
      v_ge = false;
      u_gt = true;
    }
  }
  if (v_ge && v_gt) return PrincipleVerdict::prefers(Preference::kSecond);
  if (u_ge && u_gt) return PrincipleVerdict::prefers(Preference::kFirst);
  return {};
}

// Preference induced by welfare values (first / second / none on a tie).
inline Preference welfare_preference(const UtilityVector& u,
                                     const UtilityVector& v,
                                     const WelfareParams& params) {
  const double wu = welfare(u, params);
  const double wv = welfare(v, params);
  if (wu > wv) return Preference::kFirst;
  if (wv > wu) return Preference::kSecond;
  return Preference::kNone;
}

}  // namespace fairspread

#endif  // FAIRSPREAD_WELFARE_HPP_
