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

#ifndef FAIRSPREAD_OBJECTIVES_HPP_
#define FAIRSPREAD_OBJECTIVES_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "fairspread/coverage.hpp"
#include "fairspread/welfare.hpp"

namespace fairspread {

// Set objectives over summed sketch counts. Each is additive over
// communities, so marginal gains only touch communities whose count moved.
template <class T>
concept CountObjective = requires(const T& obj, std::size_t c, std::int64_t x) {
  { obj.term(c, x) } -> std::convertible_to<double>;
};

// Converts a summed count into u_c = count / (R n_c).
class CountScale {
 public:
  CountScale() = default;
  explicit CountScale(const CoverageOracle& oracle)
      : sketches_(static_cast<double>(oracle.num_sketches())),
        sizes_(oracle.partition().sizes()) {}

  double utility(std::size_t c, std::int64_t count) const {
    return static_cast<double>(count) /
           (sketches_ * static_cast<double>(sizes_[c]));
  }
  std::size_t size(std::size_t c) const { return sizes_[c]; }
  double sketches() const { return sketches_; }

 private:
  double sketches_ = 1.0;
  std::vector<std::size_t> sizes_;
};

// Expected number of influenced vertices, sum_c n_c u_c. Values and gains
// sum integer counts before dividing, so equal spreads compare equal.
class TotalInfluenceObjective {
 public:
  explicit TotalInfluenceObjective(const CoverageOracle& oracle)
      : scale_(oracle) {}
  double term(std::size_t, std::int64_t count) const {
    return static_cast<double>(count) / scale_.sketches();
  }
  double value(std::span<const std::int64_t> counts) const {
    return static_cast<double>(std::accumulate(counts.begin(), counts.end(),
                                               std::int64_t{0})) /
           scale_.sketches();
  }
  double gain(std::span<const std::int64_t>,
              std::span<const std::int64_t> delta) const {
    return value(delta);
  }

 private:
  CountScale scale_;
};

class WelfareObjective {
 public:
  WelfareObjective(const CoverageOracle& oracle, WelfareParams params)
      : scale_(oracle), params_(params) {
    params_.validate();
  }
  double term(std::size_t c, std::int64_t count) const {
    return welfare_term(scale_.utility(c, count), scale_.size(c), params_);
  }
  const WelfareParams& params() const { return params_; }

 private:
  CountScale scale_;
  WelfareParams params_;
};

// sum_c min(u_c, gamma).
class TruncatedCoverageObjective {
 public:
  TruncatedCoverageObjective(const CoverageOracle& oracle, double gamma)
      : scale_(oracle), gamma_(gamma) {}
  double term(std::size_t c, std::int64_t count) const {
    return std::min(scale_.utility(c, count), gamma_);
  }
  double gamma() const { return gamma_; }

 private:
  CountScale scale_;
  double gamma_;
};

// sum_c min(u_c / U_c, 1); a zero bound contributes 1.
class NormalizedBoundObjective {
 public:
  NormalizedBoundObjective(const CoverageOracle& oracle,
                           std::vector<double> bounds)
      : scale_(oracle), bounds_(std::move(bounds)) {}
  double term(std::size_t c, std::int64_t count) const {
    if (bounds_[c] <= 0.0) return 1.0;
    return std::min(scale_.utility(c, count) / bounds_[c], 1.0);
  }

 private:
  CountScale scale_;
  std::vector<double> bounds_;
};

template <CountObjective Objective>
double objective_value(const Objective& obj,
                       std::span<const std::int64_t> counts) {
  if constexpr (requires { obj.value(counts); }) return obj.value(counts);
  double v = 0.0;
  for (std::size_t c = 0; c < counts.size(); ++c) v += obj.term(c, counts[c]);
  return v;
}

template <CountObjective Objective>
double objective_gain(const Objective& obj, std::span<const std::int64_t> counts,
                      std::span<const std::int64_t> delta) {
  if constexpr (requires { obj.gain(counts, delta); }) {
    return obj.gain(counts, delta);
  }
  double g = 0.0;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (delta[c] != 0) {
      g += obj.term(c, counts[c] + delta[c]) - obj.term(c, counts[c]);
    }
  }
  return g;
}

}  // namespace fairspread

#endif  // FAIRSPREAD_OBJECTIVES_HPP_
