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

// Small hand-built graphs on which fairness notions and welfare disagree,
// with their parameters pinned and their named seed sets, plus a verifier
// that recomputes every stated utility and verdict with the exact oracle.

#ifndef FAIRSPREAD_FIXTURES_HPP_
#define FAIRSPREAD_FIXTURES_HPP_

#include <cmath>
#include <compare>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fairspread/cascade.hpp"
#include "fairspread/exhaustive.hpp"
#include "fairspread/graph.hpp"
#include "fairspread/graph_io.hpp"
#include "fairspread/greedy.hpp"
#include "fairspread/rational.hpp"
#include "fairspread/saturate.hpp"
#include "fairspread/welfare.hpp"

namespace fairspread {

struct Fixture {
  std::string name;
  LabeledGraph graph;
  Json meta;  // community names, pinned parameters, named seed sets

  std::filesystem::path file_name() const { return name + ".json"; }
  SeedSet solution(const std::string& key) const {
    return SeedSet(meta.at("solutions").at(key).get<std::vector<VertexId>>(),
                   graph.graph.num_vertices());
  }
  double param(const std::string& key) const {
    return meta.at("pinned").at(key).get<double>();
  }
};

namespace detail {

// Appends vertices and stars with explicit community labels.
class FixtureBuilder {
 public:
  VertexId vertex(CommunityId c) {
    labels_.push_back(c);
    return static_cast<VertexId>(labels_.size() - 1);
  }
  void isolated(CommunityId c, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) vertex(c);
  }
  // Center in `center_label`; leaves[i] leaves of label i. Returns the center.
  VertexId star(CommunityId center_label,
                const std::vector<std::pair<CommunityId, std::size_t>>& leaves) {
    const VertexId center = vertex(center_label);
    for (const auto& [label, count] : leaves) {
      for (std::size_t i = 0; i < count; ++i) edge(center, vertex(label));
    }
    return center;
  }
  void edge(VertexId u, VertexId v) { edges_.emplace_back(u, v); }
  VertexId last() const { return static_cast<VertexId>(labels_.size() - 1); }

  LabeledGraph build(bool directed, double p) const {
    return {Graph(labels_.size(), edges_, directed, p),
            CommunityPartition(labels_)};
  }

 private:
  std::vector<CommunityId> labels_;
  std::vector<Edge> edges_;
};

}  // namespace detail

// Three communities of 100 (diamond, square, circle), p = 1, k = 4. A seeds
// the diamond 30-star, the square 60- and 10-stars and the circle 80-star;
// A' swaps the square 10-star for a circle-centred star with 5 circle and 4
// diamond leaves.
inline Fixture gap_reduction_counterexample() {
  enum : CommunityId { kDiamond, kSquare, kCircle };
  detail::FixtureBuilder b;
  const VertexId diamond30 = b.star(kDiamond, {{kDiamond, 29}});
  const VertexId square60 = b.star(kSquare, {{kSquare, 59}});
  const VertexId square10 = b.star(kSquare, {{kSquare, 9}});
  const VertexId circle80 = b.star(kCircle, {{kCircle, 79}});
  const VertexId mixed = b.star(kCircle, {{kCircle, 5}, {kDiamond, 4}});
  b.isolated(kDiamond, 66);
  b.isolated(kSquare, 30);
  b.isolated(kCircle, 14);
  Json meta = {
      {"community_names", {"diamond", "square", "circle"}},
      {"pinned", {{"p", 1.0}, {"k", 4}}},
      {"solutions",
       {{"A", {diamond30, square60, square10, circle80}},
        {"A_prime", {diamond30, square60, circle80, mixed}}}}};
  return {"gap_reduction_counterexample", b.build(false, 1.0), std::move(meta)};
}

// Black community: a 9-vertex star; white community: 3 isolated vertices.
// p = 0.8, k = 4.
inline Fixture dc_leveling_down() {
  enum : CommunityId { kBlack, kWhite };
  const double p = 0.8;
  detail::FixtureBuilder b;
  const VertexId center = b.star(kBlack, {{kBlack, 8}});
  b.isolated(kWhite, 3);
  Json meta = {
      {"community_names", {"black", "white"}},
      {"pinned", {{"p", p}, {"k", 4}, {"sketches", 20000}, {"seed", 1},
                  {"tol", 0.02}}},
      {"solutions",
       {{"utilitarian", {center, 9, 10, 11}},
        {"diversity", {center, 1, 2, 9}}}}};
  return {"dc_leveling_down", b.build(false, p), std::move(meta)};
}

// Blue and black communities of 11, white of 1 + ceil(21/p) = 28; p = 0.8,
// k = 1. The larger star (blue center, 4 blue and 4 black leaves) maximizes
// spread; the smaller star (white center, 6 blue and 1 black leaf) is the
// only single seed reaching every community.
inline Fixture maximin_rich_get_richer() {
  enum : CommunityId { kBlue, kBlack, kWhite };
  const double p = 0.8;
  const auto white_isolated = static_cast<std::size_t>(std::ceil(21.0 / p));
  detail::FixtureBuilder b;
  const VertexId big = b.star(kBlue, {{kBlue, 4}, {kBlack, 4}});
  const VertexId small = b.star(kWhite, {{kBlue, 6}, {kBlack, 1}});
  b.isolated(kBlack, 6);
  b.isolated(kWhite, white_isolated);
  Json meta = {
      {"community_names", {"blue", "black", "white"}},
      {"pinned", {{"p", p}, {"k", 1}, {"sketches", 20000}, {"seed", 1},
                  {"alpha", -20.0}}},
      {"solutions", {{"larger_star", {big}}, {"smaller_star", {small}}}}};
  return {"maximin_rich_get_richer", b.build(false, p), std::move(meta)};
}

// Directed. Circle: a 30-vertex star with arcs both ways; square: 30 isolated
// vertices, two of which the circle center also reaches. delta = 0.05,
// p = 0.1 in (delta, sqrt(delta)), n = 30 > max(3p/(p-delta), 1/(delta-p^2)).
inline Fixture dp_monotonicity() {
  enum : CommunityId { kCircle, kSquare };
  const double p = 0.1;
  detail::FixtureBuilder b;
  const VertexId center = b.vertex(kCircle);
  for (std::size_t i = 0; i < 29; ++i) {
    const VertexId leaf = b.vertex(kCircle);
    b.edge(center, leaf);
    b.edge(leaf, center);
  }
  const VertexId reached0 = b.vertex(kSquare);
  const VertexId reached1 = b.vertex(kSquare);
  b.edge(center, reached0);
  b.edge(center, reached1);
  b.isolated(kSquare, 28);
  const VertexId lone_square = reached1 + 1;
  Json meta = {
      {"community_names", {"circle", "square"}},
      {"pinned", {{"p", p}, {"k", 2}, {"delta", 0.05}}},
      {"solutions",
       {{"utilitarian", {center, lone_square}},
        {"dp_fair", {center + 1, lone_square}}}}};
  return {"dp_monotonicity", b.build(true, p), std::move(meta)};
}

// p = 1, communities of 160. Circle: stars of 42 and 23, 95 isolated;
// square: stars of 19 and 42, 99 isolated. The four seed sets pair one
// circle star with one square star.
inline Fixture dp_unconcerned() {
  enum : CommunityId { kCircle, kSquare };
  detail::FixtureBuilder b;
  const VertexId circle42 = b.star(kCircle, {{kCircle, 41}});
  const VertexId circle23 = b.star(kCircle, {{kCircle, 22}});
  b.isolated(kCircle, 95);
  const VertexId square19 = b.star(kSquare, {{kSquare, 18}});
  const VertexId square42 = b.star(kSquare, {{kSquare, 41}});
  b.isolated(kSquare, 99);
  Json meta = {
      {"community_names", {"circle", "square"}},
      {"pinned", {{"p", 1.0}, {"k", 2}, {"delta", 0.05}}},
      {"solutions",
       {{"u", {circle23, square19}},
        {"u_prime", {circle42, square19}},
        {"v", {circle23, square42}},
        {"v_prime", {circle42, square42}}}}};
  return {"dp_unconcerned", b.build(false, 1.0), std::move(meta)};
}

// p = 0.5, communities of 10. Circle: a 10-vertex star; square: a star of
// 2 + p(n-2) = 6 vertices and (n-2)(1-p) = 4 singletons.
inline Fixture exact_dp_leveling_down() {
  enum : CommunityId { kCircle, kSquare };
  const double p = 0.5;
  detail::FixtureBuilder b;
  const VertexId circle = b.star(kCircle, {{kCircle, 9}});
  const VertexId square = b.star(kSquare, {{kSquare, 5}});
  b.isolated(kSquare, 4);
  Json meta = {
      {"community_names", {"circle", "square"}},
      {"pinned", {{"p", p}, {"k", 2}}},
      {"solutions",
       {{"exact_dp", {circle + 1, square}}, {"centers", {circle, square}}}}};
  return {"exact_dp_leveling_down", b.build(false, p), std::move(meta)};
}

inline std::vector<Fixture> all_fixtures() {
  return {gap_reduction_counterexample(), dc_leveling_down(),
          maximin_rich_get_richer(),      dp_monotonicity(),
          dp_unconcerned(),               exact_dp_leveling_down()};
}

inline void write_fixture(const std::filesystem::path& dir, const Fixture& f) {
  Json header = {{"fixture", f.meta}};
  header["fixture"]["name"] = f.name;
  write_graph_file(dir / f.file_name(), f.graph, header);
}

inline Fixture load_fixture(const std::filesystem::path& path) {
  const Json doc = read_json_file(path);
  if (!doc.contains("fixture")) {
    throw FormatError(path.string() + ": missing 'fixture' header");
  }
  Fixture f;
  f.graph = load_graph(doc);
  f.meta = doc.at("fixture");
  f.name = f.meta.value("name", path.stem().string());
  return f;
}

struct FixtureCheck {
  std::string fixture;
  std::string assertion;
  bool passed = false;
  std::string detail;
};

struct FixtureReport {
  std::vector<FixtureCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return !checks.empty();
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
  }
};

namespace detail {

inline std::string format_values(const std::vector<double>& v) {
  std::ostringstream os;
  os.precision(6);
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

inline std::string format_fractions(const std::vector<Fraction>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

inline bool near_all(const std::vector<double>& a, const std::vector<double>& b,
                     double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(std::abs(a[i] - b[i]) <= tol)) return false;
  }
  return true;
}

class Checker {
 public:
  Checker(FixtureReport& report, std::string fixture)
      : report_(report), fixture_(std::move(fixture)) {}
  void operator()(std::string assertion, bool passed, std::string detail = {}) {
    report_.checks.push_back({fixture_, std::move(assertion), passed,
                              std::move(detail)});
  }

 private:
  FixtureReport& report_;
  std::string fixture_;
};

inline constexpr double kExactTol = 1e-9;

inline UtilityVector exact_of(const Fixture& f, const SeedSet& s) {
  return exact_utilities_pruned(f.graph.graph, s, f.graph.partition);
}

inline std::vector<Fraction> exact_fractions_of(const Fixture& f,
                                                const SeedSet& s) {
  return exact_fractions(
      exact_reach_counts(f.graph.graph, s, f.graph.partition),
      f.graph.partition);
}

inline void verify_gap_reduction(const Fixture& f, Checker& check) {
  const auto& part = f.graph.partition;
  const auto u = exact_fractions_of(f, f.solution("A"));
  const auto v = exact_fractions_of(f, f.solution("A_prime"));
  check("A utilities are exactly (3/10, 7/10, 4/5)",
        u == std::vector<Fraction>{{3, 10}, {7, 10}, {4, 5}},
        format_fractions(u));
  check("A' utilities are exactly (17/50, 3/5, 43/50)",
        v == std::vector<Fraction>{{17, 50}, {3, 5}, {43, 50}},
        format_fractions(v));
  check("both totals are exactly 180",
        exact_total(u, part) == Fraction(180) &&
            exact_total(v, part) == Fraction(180));
  check("gaps are exactly 1/2 and 13/25",
        exact_gap(u) == Fraction(1, 2) && exact_gap(v) == Fraction(13, 25));
  const UtilityVector uu = exact_of(f, f.solution("A"));
  const UtilityVector vv = exact_of(f, f.solution("A_prime"));
  check("gap reduction prefers A",
        check_gap_reduction(uu, vv) == PrincipleVerdict::prefers(Preference::kFirst));
  const std::size_t n = f.graph.graph.num_vertices();
  for (double alpha : {-5.0, -2.0, -1.0, -0.5, 0.0, 0.25, 0.5, 0.75, 0.9}) {
    const auto params = WelfareParams::for_graph(alpha, n);
    const double d = welfare(uu, params) - welfare(vv, params);
    std::ostringstream name;
    name << "W(A) - W(A') < 0 at alpha = " << alpha;
    check(name.str(), d < 0.0, std::to_string(d));
    if (alpha == 0.0) {
      check("W(A) - W(A') is -4.3 +- 0.1 at alpha = 0",
            std::abs(d + 4.3) <= 0.1, std::to_string(d));
    }
  }
}

inline void verify_dc_leveling_down(const Fixture& f, Checker& check) {
  const double p = f.param("p");
  const auto k = static_cast<std::size_t>(f.param("k"));
  const auto r = static_cast<std::size_t>(f.param("sketches"));
  const auto seed = static_cast<std::uint64_t>(f.param("seed"));
  const double tol = f.param("tol");
  const auto& g = f.graph.graph;
  const auto& part = f.graph.partition;
  const UtilityVector util = exact_of(f, f.solution("utilitarian"));
  const UtilityVector dc = exact_of(f, f.solution("diversity"));
  check("utilitarian utilities are ((1+8p)/9, 1)",
        near_all(util.values, {(1 + 8 * p) / 9, 1.0}, kExactTol),
        format_values(util.values));
  check("DC utilities are ((3+6p)/9, 1/3)",
        near_all(dc.values, {(3 + 6 * p) / 9, 1.0 / 3}, kExactTol),
        format_values(dc.values));
  check("utilitarian has the higher total and the smaller gap",
        check_gap_reduction(util, dc) ==
            PrincipleVerdict::prefers(Preference::kFirst));
  const SketchSet sk = sample_sketches(g, r, seed);
  const Selection greedy = greedy_utilitarian(sk, part, k);
  check("greedy utilitarian picks the star center and the 3 white vertices",
        greedy.seeds == f.solution("utilitarian"));
  const DcBounds bounds = dc_lower_bounds(g, part, k, r, seed);
  check("DC budgets are (3, 1)",
        bounds.budgets == std::vector<std::size_t>{3, 1});
  check("DC bounds are ((3+6p)/9, 1/3) within tol",
        near_all(bounds.values, {(3 + 6 * p) / 9, 1.0 / 3}, tol),
        format_values(bounds.values));
  const DcResult sel = saturate_dc(sk, part, k, bounds, tol);
  const UtilityVector got = exact_of(f, sel.selection.seeds);
  check("DC selection is feasible", sel.feasible);
  check("DC selection has exact utilities ((3+6p)/9, 1/3)",
        near_all(got.values, {(3 + 6 * p) / 9, 1.0 / 3}, kExactTol),
        format_values(got.values));
}

inline void verify_maximin(const Fixture& f, Checker& check) {
  const double p = f.param("p");
  const auto k = static_cast<std::size_t>(f.param("k"));
  const auto r = static_cast<std::size_t>(f.param("sketches"));
  const auto seed = static_cast<std::uint64_t>(f.param("seed"));
  const double alpha = f.param("alpha");
  const auto& g = f.graph.graph;
  const auto& part = f.graph.partition;
  const double white = static_cast<double>(part.size(2));
  const UtilityVector big = exact_of(f, f.solution("larger_star"));
  const UtilityVector small = exact_of(f, f.solution("smaller_star"));
  check("larger star utilities are ((1+4p)/11, 4p/11, 0)",
        near_all(big.values, {(1 + 4 * p) / 11, 4 * p / 11, 0.0}, kExactTol),
        format_values(big.values));
  check("smaller star utilities are (6p/11, p/11, 1/28)",
        near_all(small.values, {6 * p / 11, p / 11, 1.0 / white}, kExactTol),
        format_values(small.values));
  check("larger star has the higher total and the smaller gap",
        check_gap_reduction(big, small) ==
            PrincipleVerdict::prefers(Preference::kFirst));
  check("leximin prefers the smaller star",
        leximin_compare(small, big) == std::strong_ordering::greater);
  const auto params = WelfareParams::for_graph(alpha, g.num_vertices());
  const ExhaustiveResult total =
      exhaustive_opt_exact(g, part, k, ObjectiveKind::kTotal, params);
  check("exhaustive utilitarian optimum is the larger star",
        total.seeds == f.solution("larger_star"));
  const ExhaustiveResult mm =
      exhaustive_opt_exact(g, part, k, ObjectiveKind::kMaximin, params);
  check("exhaustive maximin optimum is the smaller star",
        mm.seeds == f.solution("smaller_star"));
  const ExhaustiveResult wel =
      exhaustive_opt_exact(g, part, k, ObjectiveKind::kWelfare, params);
  check("exhaustive welfare optimum at alpha = -20 is the smaller star",
        wel.seeds == f.solution("smaller_star"));
  const SketchSet sk = sample_sketches(g, r, seed);
  check("greedy welfare at alpha = -20 picks the smaller star",
        greedy_welfare(sk, part, k,
                       WelfareParams::for_sketches(alpha, r, g.num_vertices()))
                .seeds == f.solution("smaller_star"));
  check("saturate maximin picks the smaller star",
        saturate_maximin(sk, part, k).selection.seeds ==
            f.solution("smaller_star"));
  check("greedy utilitarian picks the larger star",
        greedy_utilitarian(sk, part, k).seeds == f.solution("larger_star"));
}

inline void verify_dp_monotonicity(const Fixture& f, Checker& check) {
  const double p = f.param("p");
  const double delta = f.param("delta");
  const auto k = static_cast<std::size_t>(f.param("k"));
  const auto& g = f.graph.graph;
  const auto& part = f.graph.partition;
  const double n = static_cast<double>(part.size(0));
  const UtilityVector a = exact_of(f, f.solution("utilitarian"));
  const UtilityVector b = exact_of(f, f.solution("dp_fair"));
  check("utilitarian utilities are ((1+(n-1)p)/n, (1+2p)/n)",
        near_all(a.values, {(1 + (n - 1) * p) / n, (1 + 2 * p) / n}, kExactTol),
        format_values(a.values));
  check("DP-fair utilities are ((1+p+(n-2)p^2)/n, (1+2p^2)/n)",
        near_all(b.values,
                 {(1 + p + (n - 2) * p * p) / n, (1 + 2 * p * p) / n},
                 kExactTol),
        format_values(b.values));
  check("utilitarian violates DP", !dp_satisfied(a, delta));
  check("DP-fair satisfies DP", dp_satisfied(b, delta));
  check("utilitarian Pareto-dominates DP-fair",
        check_monotonicity_preference(a, b) ==
            PrincipleVerdict::prefers(Preference::kFirst));
  const ExhaustiveResult opt = exhaustive_opt_exact(
      g, part, k, ObjectiveKind::kTotal, WelfareParams::for_graph(0.0, 60));
  check("exhaustive utilitarian optimum matches the named set's utilities",
        near_all(opt.utilities.values, a.values, kExactTol),
        format_values(opt.utilities.values));
  // Best DP-feasible set by total spread.
  UtilityVector best_fair;
  double best_total = -1.0;
  for_each_k_subset(g.num_vertices(), k, [&](std::span<const VertexId> s) {
    const UtilityVector u =
        exact_of(f, SeedSet({s.begin(), s.end()}, g.num_vertices()));
    if (dp_satisfied(u, delta) && total_influence(u) > best_total) {
      best_total = total_influence(u);
      best_fair = u;
    }
  });
  check("best DP-feasible set equals the DP-fair utilities",
        near_all(best_fair.values, b.values, kExactTol),
        format_values(best_fair.values));
  check("every community is worse off under the best DP-feasible set",
        check_monotonicity_preference(a, best_fair) ==
            PrincipleVerdict::prefers(Preference::kFirst));
}

inline void verify_dp_unconcerned(const Fixture& f, Checker& check) {
  const double delta = f.param("delta");
  const auto u = exact_fractions_of(f, f.solution("u"));
  const auto u2 = exact_fractions_of(f, f.solution("u_prime"));
  const auto v = exact_fractions_of(f, f.solution("v"));
  const auto v2 = exact_fractions_of(f, f.solution("v_prime"));
  check("u = (23, 19)/160", u == std::vector<Fraction>{{23, 160}, {19, 160}},
        format_fractions(u));
  check("u' = (42, 19)/160", u2 == std::vector<Fraction>{{42, 160}, {19, 160}},
        format_fractions(u2));
  check("v = (23, 42)/160", v == std::vector<Fraction>{{23, 160}, {42, 160}},
        format_fractions(v));
  check("v' = (42, 42)/160", v2 == std::vector<Fraction>{{42, 160}, {42, 160}},
        format_fractions(v2));
  check("pairs differ only in the circle community",
        u[1] == u2[1] && v[1] == v2[1] && u[0] == v[0] && u2[0] == v2[0]);
  auto dp = [&](const char* key) {
    return dp_satisfied(exact_of(f, f.solution(key)), delta);
  };
  check("DP prefers u over u'", dp("u") && !dp("u_prime"));
  check("DP prefers v' over v", dp("v_prime") && !dp("v"));
  for (double alpha : {-5.0, -2.0, 0.0, 0.5, 0.9}) {
    const auto params =
        WelfareParams::for_graph(alpha, f.graph.graph.num_vertices());
    const Preference first =
        welfare_preference(exact_of(f, f.solution("u")),
                           exact_of(f, f.solution("u_prime")), params);
    const Preference second =
        welfare_preference(exact_of(f, f.solution("v")),
                           exact_of(f, f.solution("v_prime")), params);
    std::ostringstream name;
    name << "welfare ranks both pairs alike at alpha = " << alpha;
    check(name.str(), first == second && first == Preference::kSecond);
  }
}

inline void verify_exact_dp(const Fixture& f, Checker& check) {
  const UtilityVector a = exact_of(f, f.solution("exact_dp"));
  const UtilityVector b = exact_of(f, f.solution("centers"));
  check("exact-DP utilities are (0.35, 0.35)",
        near_all(a.values, {0.35, 0.35}, kExactTol), format_values(a.values));
  check("center utilities are (0.55, 0.35)",
        near_all(b.values, {0.55, 0.35}, kExactTol), format_values(b.values));
  check("only the first satisfies exact DP",
        dp_satisfied(a, 0.0) && !dp_satisfied(b, 0.0));
  check("center seeds Pareto-dominate",
        check_monotonicity_preference(a, b) ==
            PrincipleVerdict::prefers(Preference::kSecond));
}

}  // namespace detail

// Loads every bundled fixture from `dir`, checks it against its builder, and
// recomputes each stated utility and verdict. A missing file is a FileError.
inline FixtureReport verify_fixtures(const std::filesystem::path& dir) {
  using Verify = std::function<void(const Fixture&, detail::Checker&)>;
  const std::map<std::string, Verify> verifiers = {
      {"gap_reduction_counterexample", detail::verify_gap_reduction},
      {"dc_leveling_down", detail::verify_dc_leveling_down},
      {"maximin_rich_get_richer", detail::verify_maximin},
      {"dp_monotonicity", detail::verify_dp_monotonicity},
      {"dp_unconcerned", detail::verify_dp_unconcerned},
      {"exact_dp_leveling_down", detail::verify_exact_dp},
  };
  FixtureReport report;
  for (const Fixture& expected : all_fixtures()) {
    const auto path = dir / expected.file_name();
    if (!std::filesystem::exists(path)) {
      throw FileError("missing fixture file " + path.string());
    }
    const Fixture f = load_fixture(path);
    detail::Checker check(report, expected.name);
    check("file matches the builder",
          f.graph.graph == expected.graph.graph &&
              f.graph.partition == expected.graph.partition &&
              f.meta.at("solutions") == expected.meta.at("solutions") &&
              f.meta.at("pinned") == expected.meta.at("pinned"));
    verifiers.at(expected.name)(f, check);
  }
  return report;
}

}  // namespace fairspread

#endif  // FAIRSPREAD_FIXTURES_HPP_
