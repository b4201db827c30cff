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

#include <cmath>
#include <compare>
#include <vector>

#include "fairspread/cascade.hpp"
#include "fairspread/rng.hpp"
#include "fairspread/welfare.hpp"
#include "gtest/gtest.h"

namespace fairspread {
namespace {

const std::vector<double> kAlphaGrid = {-5.0, -2.0, -1.0, 0.0, 0.5, 0.9};

UtilityVector three_hundred(std::vector<double> values) {
  return equal_sized(std::move(values), 100);
}

// Utilities on a 0.01 grid in [0.01, 1] so no coordinate is floored and
// welfare differences are far above rounding noise.
double grid_value(Rng& rng) {
  return static_cast<double>(1 + rng.below(100)) / 100.0;
}

UtilityVector random_vector(Rng& rng, std::size_t communities) {
  UtilityVector u;
  for (std::size_t c = 0; c < communities; ++c) {
    u.values.push_back(grid_value(rng));
    u.sizes.push_back(1 + rng.below(50));
  }
  return u;
}

TEST(WelfareTest, LogOfFullUtilityIsZero) {
  EXPECT_EQ(welfare(equal_sized({1.0, 1.0}, 5), {0.0, 0.01}), 0.0);
}

TEST(WelfareTest, PositiveAlphaIsPowerOverAlpha) {
  EXPECT_NEAR(welfare(equal_sized({0.25}, 4), {0.5, 0.01}), 4.0, 1e-12);
}

TEST(WelfareTest, GapPairDifferenceAtLog) {
  const double d = welfare(three_hundred({0.3, 0.7, 0.8}), {0.0, 1e-3}) -
                   welfare(three_hundred({0.34, 0.6, 0.86}), {0.0, 1e-3});
  EXPECT_NEAR(d, -4.3, 0.05);
}

TEST(WelfareTest, FloorKeepsZeroUtilityFinite) {
  const UtilityVector u = equal_sized({0.0, 0.5}, 10);
  for (double alpha : {-5.0, -1.0, 0.0}) {
    EXPECT_TRUE(std::isfinite(welfare(u, {alpha, 0.05})));
  }
  // Positive alpha is finite at zero without a floor.
  EXPECT_NEAR(welfare(u, {0.5, 0.05}), 10.0 * std::sqrt(0.5) / 0.5, 1e-12);
}

TEST(WelfareTest, RejectsInvalidParameters) {
  const UtilityVector u = equal_sized({0.5}, 1);
  EXPECT_THROW(welfare(u, {1.0, 0.01}), InvalidArgument);
  EXPECT_THROW(welfare(u, {0.0, 0.0}), InvalidArgument);
  EXPECT_THROW(welfare(u, {0.0, 1.0}), InvalidArgument);
  EXPECT_THROW(welfare(equal_sized({1.5}, 1), {0.0, 0.01}), InvalidArgument);
}

TEST(MetricsTest, TotalInfluence) {
  EXPECT_EQ(total_influence(equal_sized({0.0, 0.0}, 7)), 0.0);
  EXPECT_NEAR(total_influence(three_hundred({0.3, 0.7, 0.8})), 180.0, 1e-9);
  UtilityVector full{{1.0, 1.0, 1.0}, {3, 4, 5}};
  EXPECT_EQ(total_influence(full), 12.0);
}

TEST(MetricsTest, UtilityGap) {
  EXPECT_NEAR(utility_gap(three_hundred({0.3, 0.7, 0.8})), 0.5, 1e-12);
  EXPECT_NEAR(utility_gap(three_hundred({0.34, 0.6, 0.86})), 0.52, 1e-12);
  EXPECT_EQ(utility_gap(three_hundred({0.4, 0.4, 0.4})), 0.0);
}

TEST(MetricsTest, PriceOfFairness) {
  EXPECT_NEAR(pof(90.0, 100.0), 0.10, 1e-12);
  EXPECT_EQ(pof(100.0, 100.0), 0.0);
  EXPECT_EQ(pof(100.5, 100.0), 0.0);
  EXPECT_THROW(pof(1.0, 0.0), InvalidArgument);
}

TEST(MetricsTest, DemographicParity) {
  EXPECT_TRUE(dp_satisfied(three_hundred({0.4, 0.4, 0.4}), 0.0));
  EXPECT_FALSE(dp_satisfied(three_hundred({0.3, 0.7, 0.8}), 0.4));
  EXPECT_TRUE(dp_satisfied(three_hundred({0.3, 0.7, 0.8}), 0.5));
  EXPECT_THROW(dp_satisfied(three_hundred({0.3, 0.7, 0.8}), 1.0), InvalidArgument);
}

TEST(LeximinTest, ComparesSortedVectors) {
  EXPECT_EQ(leximin_compare(three_hundred({0.2, 0.4, 0.6}),
                            three_hundred({0.2, 0.2, 0.8})),
            std::strong_ordering::greater);
  EXPECT_EQ(leximin_compare(three_hundred({0.2, 0.4, 0.6}),
                            three_hundred({0.2, 0.4, 0.6})),
            std::strong_ordering::equal);
  EXPECT_EQ(leximin_compare(equal_sized({0.3, 0.9}, 1), equal_sized({0.2, 1.0}, 1)),
            std::strong_ordering::greater);
  EXPECT_EQ(leximin_compare(equal_sized({0.9, 0.3}, 1), equal_sized({0.2, 1.0}, 1)),
            std::strong_ordering::greater);
  EXPECT_THROW(leximin_compare(equal_sized({0.3}, 1), equal_sized({0.2, 1.0}, 1)),
               InvalidArgument);
}

TEST(InfluenceTransferTest, EqualSplitPreferredOverSpread) {
  EXPECT_EQ(check_influence_transfer(equal_sized({0.5, 0.5}, 10),
                                     equal_sized({0.3, 0.7}, 10)),
            PrincipleVerdict::prefers(Preference::kFirst));
}

TEST(InfluenceTransferTest, TransferToWorstOffPreferred) {
  EXPECT_EQ(check_influence_transfer(three_hundred({0.2, 0.4, 0.6}),
                                     three_hundred({0.2, 0.2, 0.8})),
            PrincipleVerdict::prefers(Preference::kFirst));
  EXPECT_EQ(check_influence_transfer(three_hundred({0.2, 0.2, 0.8}),
                                     three_hundred({0.2, 0.4, 0.6})),
            PrincipleVerdict::prefers(Preference::kSecond));
}

TEST(InfluenceTransferTest, IdenticalOrReorderedIsNotApplicable) {
  EXPECT_EQ(check_influence_transfer(three_hundred({0.2, 0.4, 0.6}),
                                     three_hundred({0.2, 0.4, 0.6})),
            PrincipleVerdict{});
  // The order flips, so no shared sorting permutation exists.
  EXPECT_EQ(check_influence_transfer(equal_sized({0.2, 0.6}, 5),
                                     equal_sized({0.7, 0.3}, 5)),
            PrincipleVerdict{});
}

TEST(InfluenceTransferTest, RejectsShapeMismatch) {
  EXPECT_THROW(check_influence_transfer(equal_sized({0.2, 0.6}, 5),
                                        equal_sized({0.2, 0.6}, 6)),
               InvalidArgument);
}

TEST(GapReductionTest, EqualTotalsSmallerGapPreferred) {
  EXPECT_EQ(check_gap_reduction(three_hundred({0.3, 0.7, 0.8}),
                                three_hundred({0.34, 0.6, 0.86})),
            PrincipleVerdict::prefers(Preference::kFirst));
}

TEST(GapReductionTest, NotApplicableCases) {
  EXPECT_EQ(check_gap_reduction(three_hundred({0.3, 0.7, 0.8}),
                                three_hundred({0.3, 0.7, 0.8})),
            PrincipleVerdict{});
  // Higher total comes with the larger gap, so neither premise holds.
  EXPECT_EQ(check_gap_reduction(equal_sized({0.5, 0.5}, 10),
                                equal_sized({0.2, 0.9}, 10)),
            PrincipleVerdict{});
}

TEST(MonotonicityTest, ParetoDominance) {
  EXPECT_EQ(check_monotonicity_preference(equal_sized({0.1, 0.2}, 3),
                                          equal_sized({0.2, 0.2}, 3)),
            PrincipleVerdict::prefers(Preference::kSecond));
  EXPECT_EQ(check_monotonicity_preference(equal_sized({0.1, 0.2}, 3),
                                          equal_sized({0.1, 0.2}, 3)),
            PrincipleVerdict{});
  EXPECT_EQ(check_monotonicity_preference(equal_sized({0.1, 0.9}, 3),
                                          equal_sized({0.2, 0.8}, 3)),
            PrincipleVerdict{});
}

TEST(WelfarePropertyTest, AgreesWithParetoDominance) {
  Rng rng(101);
  int checked = 0;
  while (checked < 2000) {
    const UtilityVector u = random_vector(rng, 2 + rng.below(3));
    UtilityVector v = u;
    for (double& x : v.values) {
      if (rng.bernoulli(0.5)) x = std::min(1.0, x + 0.01 * (1 + rng.below(20)));
    }
    const PrincipleVerdict verdict = check_monotonicity_preference(u, v);
    if (!verdict.applicable) continue;
    ++checked;
    for (double alpha : kAlphaGrid) {
      EXPECT_EQ(welfare_preference(u, v, {alpha, 1e-3}), verdict.preferred);
    }
  }
}

TEST(WelfarePropertyTest, SymmetricUnderJointPermutation) {
  Rng rng(102);
  for (int trial = 0; trial < 1000; ++trial) {
    const UtilityVector u = random_vector(rng, 4);
    UtilityVector r{{u.values.rbegin(), u.values.rend()},
                    {u.sizes.rbegin(), u.sizes.rend()}};
    for (double alpha : kAlphaGrid) {
      // Same terms summed in the reverse order: compare within one ulp scale.
      EXPECT_NEAR(welfare(u, {alpha, 1e-3}), welfare(r, {alpha, 1e-3}),
                  1e-12 * std::abs(welfare(u, {alpha, 1e-3})) + 1e-12);
    }
    // Two-community swap is bitwise exact (a + b == b + a).
    const UtilityVector a{{u.values[0], u.values[1]}, {u.sizes[0], u.sizes[1]}};
    const UtilityVector b{{u.values[1], u.values[0]}, {u.sizes[1], u.sizes[0]}};
    EXPECT_EQ(welfare(a, {-2.0, 1e-3}), welfare(b, {-2.0, 1e-3}));
  }
}

TEST(WelfarePropertyTest, IndependentOfUnconcernedCommunities) {
  Rng rng(103);
  for (int trial = 0; trial < 1000; ++trial) {
    UtilityVector u = random_vector(rng, 3);
    UtilityVector v = u;
    v.values[0] = grid_value(rng);
    if (v.values[0] == u.values[0]) continue;
    for (double alpha : kAlphaGrid) {
      const Preference before = welfare_preference(u, v, {alpha, 1e-3});
      const double common = grid_value(rng);
      UtilityVector u2 = u, v2 = v;
      u2.values[2] = v2.values[2] = common;
      EXPECT_EQ(welfare_preference(u2, v2, {alpha, 1e-3}), before);
    }
  }
}

TEST(WelfarePropertyTest, InvariantUnderPositiveScaling) {
  Rng rng(104);
  for (int trial = 0; trial < 1000; ++trial) {
    const UtilityVector u = random_vector(rng, 3);
    const UtilityVector v = random_vector(rng, 3);
    UtilityVector vs = v;
    vs.sizes = u.sizes;
    const double a = 0.1 + 0.9 * rng.uniform();
    UtilityVector ua = u, va = vs;
    for (double& x : ua.values) x *= a;
    for (double& x : va.values) x *= a;
    for (double alpha : kAlphaGrid) {
      const double d1 = welfare(u, {alpha, 1e-4}) - welfare(vs, {alpha, 1e-4});
      const double d2 = welfare(ua, {alpha, 1e-4}) - welfare(va, {alpha, 1e-4});
      if (std::abs(d1) < 1e-9) continue;
      EXPECT_EQ(d1 > 0, d2 > 0) << "alpha=" << alpha;
    }
  }
}

TEST(WelfarePropertyTest, AgreesWithInfluenceTransfer) {
  Rng rng(105);
  int checked = 0;
  while (checked < 10000) {
    const std::size_t k = 2 + rng.below(3);
    const UtilityVector u = random_vector(rng, k);
    UtilityVector v = u;
    for (double& x : v.values) x = grid_value(rng);
    const PrincipleVerdict verdict = check_influence_transfer(u, v);
    if (verdict.preferred != Preference::kSecond) continue;
    ++checked;
    for (double alpha : kAlphaGrid) {
      EXPECT_GT(welfare(v, {alpha, 1e-3}), welfare(u, {alpha, 1e-3}))
          << "alpha=" << alpha;
    }
  }
}

// Community c is a union of disjoint stars (p = 1); j seeds on the j largest
// stars reach their sum.
struct StarCommunity {
  std::vector<std::size_t> stars;  // descending component sizes
  std::size_t size = 0;
};

// True when one community order ascending-sorts both vectors.
bool same_ascending_order(const UtilityVector& u, const UtilityVector& v) {
  for (std::size_t a = 0; a < u.values.size(); ++a) {
    for (std::size_t b = 0; b < u.values.size(); ++b) {
      if (u.values[a] < u.values[b] && v.values[a] > v.values[b]) return false;
    }
  }
  return true;
}

// Neighbouring allocations on disconnected communities whose utility order
// is preserved: the smaller-gap vector is welfare-preferred.
TEST(WelfarePropertyTest, AgreesWithGapReductionWhenDisconnected) {
  Rng rng(106);
  int checked = 0;
  for (int trial = 0; trial < 20000 && checked < 2000; ++trial) {
    const std::size_t k = 2 + rng.below(3);
    std::vector<StarCommunity> comms(k);
    std::vector<Edge> edges;
    std::vector<CommunityId> labels;
    std::vector<std::vector<VertexId>> centers(k);
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t stars = 1 + rng.below(4);
      std::vector<std::size_t> sizes;
      for (std::size_t s = 0; s < stars; ++s) sizes.push_back(1 + rng.below(12));
      std::sort(sizes.rbegin(), sizes.rend());
      for (std::size_t s : sizes) {
        const auto center = static_cast<VertexId>(labels.size());
        centers[c].push_back(center);
        labels.push_back(static_cast<CommunityId>(c));
        for (std::size_t leaf = 1; leaf < s; ++leaf) {
          edges.emplace_back(center, static_cast<VertexId>(labels.size()));
          labels.push_back(static_cast<CommunityId>(c));
        }
      }
      const std::size_t isolated = rng.below(6);
      labels.insert(labels.end(), isolated, static_cast<CommunityId>(c));
    }
    const std::size_t n = labels.size();
    const Graph g(n, edges, false, 1.0);
    const CommunityPartition part(labels);
    // Neighbouring allocations: move one seed from community nu to kappa.
    std::vector<std::size_t> alloc(k);
    for (std::size_t c = 0; c < k; ++c) alloc[c] = rng.below(centers[c].size() + 1);
    const std::size_t nu = rng.below(k);
    const std::size_t kappa = (nu + 1 + rng.below(k - 1)) % k;
    if (alloc[nu] == 0 || alloc[kappa] == centers[kappa].size()) continue;
    std::vector<std::size_t> moved = alloc;
    --moved[nu];
    ++moved[kappa];
    auto seeds_of = [&](const std::vector<std::size_t>& a) {
      std::vector<VertexId> s;
      for (std::size_t c = 0; c < k; ++c) {
        s.insert(s.end(), centers[c].begin(), centers[c].begin() + a[c]);
      }
      return SeedSet(s, n);
    };
    const UtilityVector u = exact_utilities(g, seeds_of(alloc), part);
    const UtilityVector v = exact_utilities(g, seeds_of(moved), part);
    const PrincipleVerdict verdict = check_gap_reduction(u, v);
    if (!verdict.applicable || !same_ascending_order(u, v)) continue;
    ++checked;
    for (double alpha : kAlphaGrid) {
      const auto params = WelfareParams::for_graph(alpha, n);
      EXPECT_EQ(welfare_preference(u, v, params), verdict.preferred)
          << "alpha=" << alpha;
    }
  }
  EXPECT_GE(checked, 200);
}

// Moving one seed on disconnected communities can shrink the gap while the
// donor drops below the recipient; welfare then follows the transfer, not
// the gap. Community sizes 27, 4, 8, 17; both totals are 42.
TEST(WelfarePropertyTest, OrderFlipCanOverrideGapReduction) {
  const std::vector<std::size_t> sizes = {27, 4, 8, 17};
  const UtilityVector u{{26.0 / 27, 1.0 / 4, 5.0 / 8, 10.0 / 17}, sizes};
  const UtilityVector v{{19.0 / 27, 1.0 / 4, 5.0 / 8, 17.0 / 17}, sizes};
  EXPECT_NEAR(total_influence(u), total_influence(v), 1e-12);
  EXPECT_EQ(check_gap_reduction(u, v),
            PrincipleVerdict::prefers(Preference::kFirst));
  EXPECT_FALSE(same_ascending_order(u, v));
  for (double alpha : kAlphaGrid) {
    EXPECT_EQ(welfare_preference(u, v, {alpha, 1e-3}), Preference::kSecond)
        << "alpha=" << alpha;
  }
}

}  // namespace
}  // namespace fairspread
