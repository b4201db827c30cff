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
#include <algorithm>
#include <filesystem>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fairspread/experiments.hpp"
#include "gtest/gtest.h"

namespace fairspread {
namespace {

ExperimentConfig small_sweep() {
  ExperimentConfig c;
  c.label = "two_blocks";
  c.sbm = SbmSpec::uniform_between({12, 8}, {0.3, 0.2}, 0.05);
  c.budgets = {2};
  c.budget_fractions = {0.25};
  c.alphas = {-2.0, 0.0, 0.5};
  c.baselines = {"maximin", "dc"};
  c.replications = 3;
  c.sketches = 60;
  c.p = 0.5;
  c.master_seed = 11;
  return c;
}

TEST(ExperimentConfigTest, ParsesJsonWithDefaults) {
  const ExperimentConfig c = load_experiment_config(Json::parse(R"({
    "sbm": {"community_sizes": [5, 5], "within_prob": [0.2, 0.2],
            "between_prob": [[0.2, 0.01], [0.01, 0.2]]},
    "budgets": [2]
  })"));
  EXPECT_EQ(c.kind, ExperimentKind::kSweep);
  EXPECT_EQ(c.alphas, kDefaultAlphaGrid);
  EXPECT_EQ(c.replications, 20u);
  EXPECT_EQ(c.sketches, 1000u);
  EXPECT_DOUBLE_EQ(c.p, 0.25);
  ASSERT_TRUE(c.sbm.has_value());
  EXPECT_EQ(c.sbm->community_sizes, (std::vector<std::size_t>{5, 5}));
  EXPECT_NO_THROW(c.validate());
}

TEST(ExperimentConfigTest, StudyPresetsCarryTheirGrids) {
  const ExperimentConfig conn = load_experiment_config(
      Json::parse(R"({"experiment": "relative_connectedness"})"));
  EXPECT_EQ(conn.levels.size(), 7u);
  EXPECT_EQ(conn.budget_fractions, std::vector<double>{0.1});
  const ExperimentConfig size = load_experiment_config(
      Json::parse(R"({"experiment": "relative_size", "replications": 2})"));
  EXPECT_EQ(size.levels.size(), 9u);
  EXPECT_EQ(size.replications, 2u);
}

TEST(ExperimentConfigTest, RejectsBadDocuments) {
  EXPECT_THROW(load_experiment_config(Json::parse(R"({"bogus": 1})")),
               FormatError);
  EXPECT_THROW(load_experiment_config(Json::parse(R"({"experiment": "x"})")),
               FormatError);
  EXPECT_THROW(load_experiment_config(Json::parse(R"({"budgets": "two"})")),
               FormatError);
  ExperimentConfig c = small_sweep();
  c.alphas = {1.0};
  EXPECT_THROW(c.validate(), InvalidArgument);
  c = small_sweep();
  c.baselines = {"random"};
  EXPECT_THROW(c.validate(), InvalidArgument);
  c = small_sweep();
  c.budgets = {21};
  EXPECT_THROW(run_sweep(c), InvalidArgument);
}

TEST(ExperimentConfigTest, BundledConfigsParse) {
  const std::filesystem::path dir =
      std::filesystem::path(FAIRSPREAD_FIXTURE_DIR).parent_path() / "configs";
  for (const char* name : {"sweep_three_communities.json",
                           "relative_connectedness.json", "relative_size.json"}) {
    const ExperimentConfig c = load_experiment_config(read_json_file(dir / name));
    EXPECT_NO_THROW(c.validate()) << name;
    EXPECT_EQ(c.replications, 20u) << name;
  }
  EXPECT_NO_THROW(load_sbm_spec(read_json_file(dir / "sbm_two_communities.json")));
}

TEST(ExperimentConfigTest, JsonRoundTrip) {
  const ExperimentConfig c = small_sweep();
  const ExperimentConfig back =
      load_experiment_config(experiment_config_to_json(c));
  EXPECT_EQ(experiment_config_to_json(back), experiment_config_to_json(c));
}

TEST(SweepTest, RowsCoverEveryMethodBudgetAndReplication) {
  const ExperimentConfig c = small_sweep();
  const ResultTable t = run_sweep(c);
  // 2 budgets x (utilitarian + 3 alphas + 2 baselines) x 3 replications.
  ASSERT_EQ(t.rows.size(), 2u * 6u * 3u);
  for (const auto& r : t.rows) {
    ASSERT_EQ(r.utilities.size(), 2u);
    const double total = 12 * r.utilities[0] + 8 * r.utilities[1];
    EXPECT_NEAR(r.total, total, 1e-9);
    EXPECT_NEAR(r.gap, std::abs(r.utilities[0] - r.utilities[1]), 1e-12);
    EXPECT_GE(r.pof, 0.0);
    EXPECT_LE(r.pof, 1.0);
    EXPECT_TRUE(r.k == 2 || r.k == 5);
    EXPECT_EQ(r.alpha.has_value(), r.method == "welfare");
    if (r.method == "utilitarian") {
      EXPECT_EQ(r.pof, 0.0);
    }
  }
}

TEST(SweepTest, PriceOfFairnessIsRelativeToUtilitarianTotal) {
  const ResultTable t = run_sweep(small_sweep());
  for (const auto& r : t.rows) {
    const ResultRow* im = nullptr;
    for (const auto& s : t.rows) {
      if (s.method == "utilitarian" && s.k == r.k &&
          s.replication == r.replication) {
        im = &s;
      }
    }
    ASSERT_NE(im, nullptr);
    const double expected = std::clamp(1.0 - r.total / im->total, 0.0, 1.0);
    EXPECT_NEAR(r.pof, expected, 1e-12);
  }
}

TEST(SweepTest, DeterministicAndThreadInvariant) {
  ExperimentConfig c = small_sweep();
  const std::string one = format_csv(run_sweep(c));
  EXPECT_EQ(format_csv(run_sweep(c)), one);
  c.threads = 3;
  EXPECT_EQ(format_csv(run_sweep(c)), one);
  c.master_seed = 12;
  EXPECT_NE(format_csv(run_sweep(c)), one);
}

TEST(SweepTest, ReplicationsDrawDistinctGraphs) {
  const ResultTable t = run_sweep(small_sweep());
  std::vector<double> totals;
  for (const auto& r : t.rows) {
    if (r.method == "utilitarian" && r.k == 5) totals.push_back(r.total);
  }
  ASSERT_EQ(totals.size(), 3u);
  EXPECT_FALSE(totals[0] == totals[1] && totals[1] == totals[2]);
}

TEST(SweepTest, GraphFileSweepReusesTheGraph) {
  ExperimentConfig c = small_sweep();
  const LabeledGraph lg = generate_sbm(*c.sbm, 5, 0.5);
  const auto path =
      std::filesystem::temp_directory_path() / "fairspread_sweep_graph.json";
  write_graph_file(path, lg);
  c.sbm.reset();
  c.graph_file = path.string();
  const ResultTable t = run_sweep(c);
  EXPECT_EQ(t.rows.size(), 36u);
  std::filesystem::remove(path);
}

TEST(SummaryTest, MeanAndSampleDeviation) {
  const Stat s = mean_sd({1.0, 2.0, 3.0, 6.0});
  EXPECT_DOUBLE_EQ(s.mean, 3.0);
  EXPECT_DOUBLE_EQ(s.sd, std::sqrt(14.0 / 3.0));
  EXPECT_EQ(mean_sd({4.0}).sd, 0.0);
}

TEST(SummaryTest, GroupsByInstanceMethodAlphaAndBudget) {
  const ResultTable t = run_sweep(small_sweep());
  const auto summary = t.summary();
  ASSERT_EQ(summary.size(), 12u);
  for (const auto& s : summary) {
    EXPECT_EQ(s.count, 3u);
    std::vector<double> gaps;
    for (const auto& r : t.rows) {
      if (r.method == s.method && r.k == s.k && r.alpha == s.alpha) {
        gaps.push_back(r.gap);
      }
    }
    EXPECT_DOUBLE_EQ(s.gap.mean,
                     std::accumulate(gaps.begin(), gaps.end(), 0.0) / 3.0);
  }
  EXPECT_NE(t.find(summary, "two_blocks", "welfare", -2.0), nullptr);
  EXPECT_EQ(t.find(summary, "two_blocks", "welfare", 0.7), nullptr);
}

TEST(CsvTest, HeaderRowsAndSummaryLines) {
  const ResultTable t = run_sweep(small_sweep());
  std::istringstream in(format_csv(t));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "instance,replication,method,k,alpha,gap,pof,total,u_0,u_1");
  std::size_t data = 0, mean = 0, sd = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 9);
    if (line.find(",mean,") != std::string::npos) {
      ++mean;
    } else if (line.find(",sd,") != std::string::npos) {
      ++sd;
    } else {
      ++data;
    }
  }
  EXPECT_EQ(data, 36u);
  EXPECT_EQ(mean, 12u);
  EXPECT_EQ(sd, 12u);
}

TEST(MetadataTest, EchoesConfigAndConventions) {
  const ExperimentConfig c = small_sweep();
  const Json meta = experiment_metadata(c);
  EXPECT_EQ(meta.at("version"), kVersion);
  EXPECT_EQ(meta.at("config").at("master_seed"), 11);
  EXPECT_TRUE(meta.contains("leftover_budget"));
  EXPECT_TRUE(meta.contains("tie_break"));
}

TEST(StudyTest, ConnectednessInstances) {
  const SbmSpec spec = connectedness_spec(0.02);
  EXPECT_EQ(spec.community_sizes, (std::vector<std::size_t>{100, 100, 100}));
  EXPECT_EQ(spec.within_prob, (std::vector<double>{0.06, 0.03, 0.02}));
  EXPECT_DOUBLE_EQ(spec.between_prob[0][2], 0.005);
  ExperimentConfig c = ExperimentConfig::relative_connectedness();
  c.levels = {0.0, 0.06};
  c.replications = 1;
  c.sketches = 20;
  c.alphas = {-2.0};
  const ResultTable t = relative_connectedness_experiment(c);
  ASSERT_EQ(t.rows.size(), 4u);
  EXPECT_EQ(t.rows.front().instance, "q3=0");
  EXPECT_EQ(t.rows.back().instance, "q3=0.06");
  EXPECT_EQ(t.rows.front().k, 30u);
}

TEST(StudyTest, RelativeSizeInstances) {
  const SbmSpec spec = relative_size_spec(3);
  EXPECT_EQ(spec.community_sizes, (std::vector<std::size_t>{300, 100}));
  EXPECT_DOUBLE_EQ(spec.between_prob[0][1], 0.001);
  ExperimentConfig c = ExperimentConfig::relative_size();
  c.levels = {2};
  c.replications = 1;
  c.sketches = 20;
  c.alphas = {};
  const ResultTable t = relative_size_experiment(c);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows.front().instance, "ratio=2");
  EXPECT_EQ(t.rows.front().k, 30u);
  c.levels = {0.5};
  EXPECT_THROW(relative_size_experiment(c), InvalidArgument);
}

TEST(StudyTest, SixteenCommunityTemplate) {
  EXPECT_EQ(std::accumulate(kSixteenCommunitySizes.begin(),
                            kSixteenCommunitySizes.end(), std::size_t{0}),
            5940u);
  std::vector<std::vector<double>> m(16, std::vector<double>(16, 0.001));
  for (std::size_t c = 0; c < 16; ++c) m[c][c] = 0.01;
  const SbmSpec spec = sixteen_community_template(m);
  EXPECT_EQ(spec.num_vertices(), 5940u);
  EXPECT_DOUBLE_EQ(spec.within_prob[3], 0.01);
  m.pop_back();
  EXPECT_THROW(sixteen_community_template(m), InvalidArgument);
}

TEST(StudyTrendTest, SymmetricCommunitiesGetEqualUtilities) {
  // At q3 = 0.06 communities 0 and 2 are exchangeable.
  ExperimentConfig c = ExperimentConfig::relative_connectedness();
  c.levels = {0.06};
  c.alphas = {};
  c.replications = 12;
  c.sketches = 200;
  const ResultTable t = relative_connectedness_experiment(c);
  std::vector<double> diff;
  for (const auto& r : t.rows) diff.push_back(r.utilities[0] - r.utilities[2]);
  const Stat s = mean_sd(diff);
  EXPECT_LE(std::abs(s.mean), 3.0 * s.sd / std::sqrt(12.0) + 1e-3);
}

TEST(StudyTrendTest, EqualSizesGiveNoSystematicGap) {
  ExperimentConfig c = ExperimentConfig::relative_size();
  c.levels = {1};
  c.alphas = {};
  c.replications = 12;
  c.sketches = 200;
  const ResultTable t = relative_size_experiment(c);
  std::vector<double> diff;
  for (const auto& r : t.rows) diff.push_back(r.utilities[0] - r.utilities[1]);
  const Stat s = mean_sd(diff);
  EXPECT_LE(std::abs(s.mean), 3.0 * s.sd / std::sqrt(12.0) + 1e-3);
}

TEST(StudyTrendTest, UtilitarianGapGrowsWithSizeRatio) {
  ExperimentConfig c = ExperimentConfig::relative_size();
  c.levels = {1, 5, 9};
  c.alphas = {};
  c.replications = 3;
  c.sketches = 200;
  const ResultTable t = relative_size_experiment(c);
  const auto summary = t.summary();
  const double g1 = t.find(summary, "ratio=1", "utilitarian")->gap.mean;
  const double g5 = t.find(summary, "ratio=5", "utilitarian")->gap.mean;
  const double g9 = t.find(summary, "ratio=9", "utilitarian")->gap.mean;
  EXPECT_LT(g1, g5);
  EXPECT_LT(g5, g9);
}

TEST(StudyTrendTest, RowsStayInRange) {
  ExperimentConfig c = ExperimentConfig::relative_size();
  c.levels = {1, 5, 9};
  c.alphas = {-2.0};
  c.baselines = {"maximin", "dc"};
  c.replications = 2;
  c.sketches = 100;
  const ResultTable t = relative_size_experiment(c);
  for (const auto& r : t.rows) {
    EXPECT_GE(r.gap, 0.0);
    EXPECT_LE(r.gap, 1.0);
    EXPECT_GE(r.pof, 0.0);
    EXPECT_LE(r.pof, 1.0);
    for (double u : r.utilities) {
      EXPECT_GE(u, 0.0);
      EXPECT_LE(u, 1.0);
    }
  }
}

}  // namespace
}  // namespace fairspread
