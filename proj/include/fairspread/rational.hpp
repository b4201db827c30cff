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

#ifndef FAIRSPREAD_RATIONAL_HPP_
#define FAIRSPREAD_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fairspread/errors.hpp"
#include "fairspread/graph.hpp"

namespace fairspread {

// Reduced fraction with positive denominator, for exact bookkeeping of
// deterministic-spread utilities.
class Fraction {
 public:
  constexpr Fraction(std::int64_t num = 0, std::int64_t den = 1)
      : num_(num), den_(den) {
    if (den_ == 0) throw InvalidArgument("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend constexpr Fraction operator+(Fraction a, Fraction b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Fraction operator-(Fraction a, Fraction b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Fraction operator*(Fraction a, Fraction b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend constexpr bool operator==(Fraction a, Fraction b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(Fraction a, Fraction b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }
  friend std::ostream& operator<<(std::ostream& os, Fraction f) {
    os << f.num_;
    if (f.den_ != 1) os << '/' << f.den_;
    return os;
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

inline std::vector<Fraction> exact_fractions(std::span<const std::int64_t> counts,
                                             const CommunityPartition& part) {
  std::vector<Fraction> out;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    out.emplace_back(counts[c], static_cast<std::int64_t>(part.size(c)));
  }
  return out;
}

inline Fraction exact_total(std::span<const Fraction> u,
                            const CommunityPartition& part) {
  Fraction t;
  for (std::size_t c = 0; c < u.size(); ++c) {
    t = t + u[c] * Fraction(static_cast<std::int64_t>(part.size(c)));
  }
  return t;
}

inline Fraction exact_gap(std::span<const Fraction> u) {
  if (u.empty()) return {};
  Fraction lo = u[0], hi = u[0];
  for (Fraction f : u) {
    if (f < lo) lo = f;
    if (f > hi) hi = f;
  }
  return hi - lo;
}

}  // namespace fairspread

#endif  // FAIRSPREAD_RATIONAL_HPP_
