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

// Synthetic experiment harness: alpha/budget sweeps over SBM or file graphs,
// the relative-connectedness and relative-size studies, and CSV/metadata
// output. Each (instance, replication) owns RNG streams keyed by the master
// seed, so tables are reproducible bitwise for any thread count.

#ifndef FAIRSPREAD_EXPERIMENTS_HPP_
#define FAIRSPREAD_EXPERIMENTS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fairspread/cascade.hpp"
#include "fairspread/coverage.hpp"
#include "fairspread/errors.hpp"
#include "fairspread/graph.hpp"
#include "fairspread/graph_io.hpp"
#include "fairspread/greedy.hpp"
#include "fairspread/parallel.hpp"
#include "fairspread/saturate.hpp"
#include "fairspread/welfare.hpp"

namespace fairspread {

inline constexpr const char* kVersion = "0.1.0";

inline const std::vector<double> kDefaultAlphaGrid = {-9.0, -5.0, -2.0,
                                                      0.0,  0.5,  0.9};

enum class ExperimentKind { kSweep, kRelativeConnectedness, kRelativeSize };

inline const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kRelativeConnectedness:
      return "relative_connectedness";
    case ExperimentKind::kRelativeSize:
      return "relative_size";
    default:
      return "sweep";
  }
}

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kSweep;
  std::string label = "sweep";
  std::optional<SbmSpec> sbm;
  std::optional<std::string> graph_file;
  std::vector<std::size_t> budgets;          // absolute k values
  std::vector<double> budget_fractions;      // k = round(f * n)
  std::vector<double> alphas = kDefaultAlphaGrid;
  std::vector<std::string> baselines;        // subset of {maximin, dc}
  std::vector<double> levels;                // q3 values or size ratios
  std::size_t replications = 20;
  std::uint64_t master_seed = 1;
  std::size_t sketches = kDefaultSketches;
  double p = 0.25;
  double tol = kDefaultSaturateTolerance;
  std::size_t threads = 1;

  void validate() const {
    if (replications < 1) throw InvalidArgument("replications must be >= 1");
    if (sketches < 1) throw InvalidArgument("sketch count must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in [0, 1]");
    if (!(tol > 0.0 && tol < 1.0)) throw InvalidArgument("tol must lie in (0, 1)");
    if (budgets.empty() && budget_fractions.empty()) {
      throw InvalidArgument("no budgets given");
    }
    for (double f : budget_fractions) {
      if (!(f >= 0.0 && f <= 1.0)) {
        throw InvalidArgument("budget fractions must lie in [0, 1]");
      }
    }
    for (double a : alphas) WelfareParams{a, 0.5}.validate();
    for (const auto& b : baselines) {
      if (b != "utilitarian" && b != "maximin" && b != "dc") {
        throw InvalidArgument("unknown baseline '" + b +
                              "' (expected utilitarian, maximin or dc)");
      }
    }
    if (kind == ExperimentKind::kSweep && !sbm && !graph_file) {
      throw InvalidArgument("a sweep needs an SBM spec or a graph file");
    }
    if (sbm) sbm->validate();
  }

  // Defaults of the connectedness study: sizes (100, 100, 100),
  // q = (0.06, 0.03, q3), between 0.005, k = 0.1 n, q3 in {0, ..., 0.06}.
  static ExperimentConfig relative_connectedness() {
    ExperimentConfig c;
    c.kind = ExperimentKind::kRelativeConnectedness;
    c.label = "relative_connectedness";
    c.budget_fractions = {0.1};
    c.levels = {0.0, 0.01, 0.02, 0.03, 0.04, 0.05, 0.06};
    return c;
  }

  // Defaults of the size study: sizes (100 r, 100), q = 0.005, between
  // 0.001, k = 0.1 n, r in {1, ..., 9}.
  static ExperimentConfig relative_size() {
    ExperimentConfig c;
    c.kind = ExperimentKind::kRelativeSize;
    c.label = "relative_size";
    c.budget_fractions = {0.1};
    c.levels = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    return c;
  }
};

namespace detail {

template <class T>
void read_optional(const Json& doc, const char* key, T& out) {
  if (!doc.contains(key)) return;
  try {
    out = doc.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace detail

inline ExperimentConfig load_experiment_config(const Json& doc) {
  if (!doc.is_object()) throw FormatError("config must be an object");
  std::string kind = "sweep";
  detail::read_optional(doc, "experiment", kind);
  ExperimentConfig c;
  if (kind == "relative_connectedness") {
    c = ExperimentConfig::relative_connectedness();
  } else if (kind == "relative_size") {
    c = ExperimentConfig::relative_size();
  } else if (kind != "sweep") {
    throw FormatError("unknown experiment '" + kind + "'");
  }
  static const std::vector<std::string> known = {
      "experiment", "label",    "sbm",          "graph",       "budgets",
      "budget_fractions",       "alphas",       "baselines",   "levels",
      "replications",           "master_seed",  "sketches",    "p",
      "tol",        "threads"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw FormatError("unknown config field '" + key + "'");
    }
  }
  detail::read_optional(doc, "label", c.label);
  if (doc.contains("sbm")) c.sbm = load_sbm_spec(doc.at("sbm"));
  if (doc.contains("graph")) {
    std::string path;
    detail::read_optional(doc, "graph", path);
    c.graph_file = path;
  }
  detail::read_optional(doc, "budgets", c.budgets);
  detail::read_optional(doc, "budget_fractions", c.budget_fractions);
  detail::read_optional(doc, "alphas", c.alphas);
  detail::read_optional(doc, "baselines", c.baselines);
  detail::read_optional(doc, "levels", c.levels);
  detail::read_optional(doc, "replications", c.replications);
  detail::read_optional(doc, "master_seed", c.master_seed);
  detail::read_optional(doc, "sketches", c.sketches);
  detail::read_optional(doc, "p", c.p);
  detail::read_optional(doc, "tol", c.tol);
  detail::read_optional(doc, "threads", c.threads);
  return c;
}

inline Json experiment_config_to_json(const ExperimentConfig& c) {
  Json doc = {{"experiment", to_string(c.kind)},
              {"label", c.label},
              {"budgets", c.budgets},
              {"budget_fractions", c.budget_fractions},
              {"alphas", c.alphas},
              {"baselines", c.baselines},
              {"levels", c.levels},
              {"replications", c.replications},
              {"master_seed", c.master_seed},
              {"sketches", c.sketches},
              {"p", c.p},
              {"tol", c.tol},
              {"threads", c.threads}};
  if (c.sbm) doc["sbm"] = sbm_spec_to_json(*c.sbm);
  if (c.graph_file) doc["graph"] = *c.graph_file;
  return doc;
}

enum class MethodKind { kUtilitarian, kWelfare, kMaximin, kDc };

struct Method {
  MethodKind kind = MethodKind::kUtilitarian;
  double alpha = 0.0;  // welfare only

  std::string label() const {
    switch (kind) {
      case MethodKind::kWelfare:
        return "welfare";
      case MethodKind::kMaximin:
        return "maximin";
      case MethodKind::kDc:
        return "dc";
      default:
        return "utilitarian";
    }
  }
  std::optional<double> alpha_value() const {
    if (kind == MethodKind::kWelfare) return alpha;
    return std::nullopt;
  }
};

struct ResultRow {
  std::string instance;
  std::size_t replication = 0;
  std::string method;
  std::size_t k = 0;
  std::optional<double> alpha;
  double gap = 0.0;
  double pof = 0.0;
  double total = 0.0;
  std::vector<double> utilities;
};

struct Stat {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation; 0 for a single value
};

inline Stat mean_sd(const std::vector<double>& xs) {
  Stat s;
  if (xs.empty()) return s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

struct SummaryRow {
  std::string instance;
  std::string method;
  std::size_t k = 0;
  std::optional<double> alpha;
  std::size_t count = 0;
  Stat gap, pof, total;
  std::vector<Stat> utilities;
};

struct ResultTable {
  std::vector<ResultRow> rows;

  // Mean and standard deviation over replications per (instance, method,
  // alpha, k), in order of first appearance.
  std::vector<SummaryRow> summary() const {
    using Key = std::tuple<std::string, std::string, std::size_t, bool, double>;
    std::map<Key, std::size_t> index;
    std::vector<std::vector<const ResultRow*>> groups;
    for (const auto& r : rows) {
      const Key key{r.instance, r.method, r.k, r.alpha.has_value(),
                    r.alpha.value_or(0.0)};
      auto [it, inserted] = index.emplace(key, groups.size());
      if (inserted) groups.emplace_back();
      groups[it->second].push_back(&r);
    }
    std::vector<SummaryRow> out;
    for (const auto& g : groups) {
      SummaryRow s;
      s.instance = g.front()->instance;
      s.method = g.front()->method;
      s.k = g.front()->k;
      s.alpha = g.front()->alpha;
      s.count = g.size();
      auto column = [&](auto get) {
        std::vector<double> xs;
        for (const ResultRow* r : g) xs.push_back(get(*r));
        return mean_sd(xs);
      };
      s.gap = column([](const ResultRow& r) { return r.gap; });
      s.pof = column([](const ResultRow& r) { return r.pof; });
      s.total = column([](const ResultRow& r) { return r.total; });
      for (std::size_t c = 0; c < g.front()->utilities.size(); ++c) {
        s.utilities.push_back(
            column([c](const ResultRow& r) { return r.utilities[c]; }));
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  const SummaryRow* find(const std::vector<SummaryRow>& summary,
                         const std::string& instance, const std::string& method,
                         std::optional<double> alpha = std::nullopt) const {
    for (const auto& s : summary) {
      if (s.instance == instance && s.method == method && s.alpha == alpha) {
        return &s;
      }
    }
    return nullptr;
  }
};

namespace detail {

inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline std::string format_alpha(const std::optional<double>& a) {
  return a ? format_number(*a) : std::string();
}

}  // namespace detail

// Header `instance,replication,method,k,alpha,gap,pof,total,u_0..u_{C-1}`,
// one line per row, then one "mean" and one "sd" line per summary group.
inline std::string format_csv(const ResultTable& table) {
  std::size_t communities = 0;
  for (const auto& r : table.rows) {
    communities = std::max(communities, r.utilities.size());
  }
  std::ostringstream os;
  os << "instance,replication,method,k,alpha,gap,pof,total";
  for (std::size_t c = 0; c < communities; ++c) os << ",u_" << c;
  os << '\n';
  using detail::format_number;
  for (const auto& r : table.rows) {
    os << r.instance << ',' << r.replication << ',' << r.method << ',' << r.k
       << ',' << detail::format_alpha(r.alpha) << ',' << format_number(r.gap)
       << ',' << format_number(r.pof) << ',' << format_number(r.total);
    for (std::size_t c = 0; c < communities; ++c) {
      os << ',' << (c < r.utilities.size() ? format_number(r.utilities[c]) : "");
    }
    os << '\n';
  }
  for (const auto& s : table.summary()) {
    for (const bool mean : {true, false}) {
      auto pick = [&](const Stat& st) { return format_number(mean ? st.mean : st.sd); };
      os << s.instance << ',' << (mean ? "mean" : "sd") << ',' << s.method << ','
         << s.k << ',' << detail::format_alpha(s.alpha) << ',' << pick(s.gap)
         << ',' << pick(s.pof) << ',' << pick(s.total);
      for (std::size_t c = 0; c < communities; ++c) {
        os << ',' << (c < s.utilities.size() ? pick(s.utilities[c]) : "");
      }
      os << '\n';
    }
  }
  return os.str();
}

// Echo of the resolved configuration plus the conventions every run uses.
inline Json experiment_metadata(const ExperimentConfig& cfg) {
  return Json{
      {"version", kVersion},
      {"config", experiment_config_to_json(cfg)},
      {"rng", "mt19937_64 per stream; stream seeds derived by splitmix64 "
              "from (master_seed, stream tag + instance index, replication)"},
      {"tie_break", "lowest vertex id"},
      {"welfare_epsilon", "1 / (2 * sketches * n)"},
      {"leftover_budget", "maximin and dc spend remaining seeds on total spread"},
      {"dc_bounds", "within-community induced subgraph, own sketches"},
      {"pof_reference", "utilitarian greedy on the same sketches"}};
}

// One graph family member: id plus a generator from a seed.
struct InstanceSpec {
  std::string id;
  std::function<LabeledGraph(std::uint64_t seed)> make;
};

namespace detail {

inline constexpr std::uint64_t kGraphStream = 0x6a9;
inline constexpr std::uint64_t kSketchStream = 0x5e7c;
inline constexpr std::uint64_t kDcStream = 0xdcb;

inline std::vector<std::size_t> resolve_budgets(const ExperimentConfig& cfg,
                                                std::size_t n) {
  std::vector<std::size_t> out = cfg.budgets;
  for (double f : cfg.budget_fractions) {
    out.push_back(static_cast<std::size_t>(std::llround(f * static_cast<double>(n))));
  }
  for (std::size_t k : out) check_budget(k, n);
  return out;
}

inline std::vector<Method> resolve_methods(const ExperimentConfig& cfg) {
  std::vector<Method> methods;
  for (double a : cfg.alphas) methods.push_back({MethodKind::kWelfare, a});
  for (const auto& b : cfg.baselines) {
    if (b == "maximin") methods.push_back({MethodKind::kMaximin, 0.0});
    if (b == "dc") methods.push_back({MethodKind::kDc, 0.0});
  }
  return methods;
}

inline ResultRow make_row(const std::string& instance, std::size_t rep,
                          const Method& m, std::size_t k,
                          const UtilityVector& u, double im_total) {
  ResultRow r;
  r.instance = instance;
  r.replication = rep;
  r.method = m.label();
  r.k = k;
  r.alpha = m.alpha_value();
  r.utilities = u.values;
  r.total = total_influence(u);
  r.gap = utility_gap(u);
  r.pof = im_total > 0.0 ? pof(r.total, im_total) : 0.0;
  return r;
}

inline std::vector<ResultRow> run_replication(const ExperimentConfig& cfg,
                                              const InstanceSpec& inst,
                                              std::size_t inst_index,
                                              std::size_t rep) {
  const std::uint64_t master = cfg.master_seed;
  const LabeledGraph lg =
      inst.make(stream_seed(master, kGraphStream + inst_index, rep));
  const std::size_t n = lg.graph.num_vertices();
  const SketchSet sk = sample_sketches(
      lg.graph, cfg.sketches, stream_seed(master, kSketchStream + inst_index, rep));
  const CoverageOracle oracle(sk, lg.partition);
  std::vector<ResultRow> rows;
  for (std::size_t k : resolve_budgets(cfg, n)) {
    const Selection im = greedy_utilitarian(oracle, k);
    const double im_total = total_influence(im.utilities);
    rows.push_back(make_row(inst.id, rep, Method{}, k, im.utilities, im_total));
    for (const Method& m : resolve_methods(cfg)) {
      UtilityVector u;
      switch (m.kind) {
        case MethodKind::kWelfare:
          u = greedy_welfare(oracle, k,
                             WelfareParams::for_sketches(m.alpha, cfg.sketches, n))
                  .utilities;
          break;
        case MethodKind::kMaximin:
          u = saturate_maximin(oracle, k, cfg.tol).selection.utilities;
          break;
        case MethodKind::kDc: {
          const DcBounds b = dc_lower_bounds(
              lg.graph, lg.partition, k, cfg.sketches,
              stream_seed(master, kDcStream + inst_index, rep));
          u = saturate_dc(oracle, k, b, cfg.tol).selection.utilities;
          break;
        }
        default:
          u = im.utilities;
      }
      rows.push_back(make_row(inst.id, rep, m, k, u, im_total));
    }
  }
  return rows;
}

}  // namespace detail

// Runs every (instance, replication) pair; rows come out ordered by
// instance, replication, budget, then method.
inline ResultTable run_instances(const ExperimentConfig& cfg,
                                 const std::vector<InstanceSpec>& instances) {
  cfg.validate();
  const std::size_t tasks = instances.size() * cfg.replications;
  std::vector<std::vector<ResultRow>> slots(tasks);
  parallel_chunks(tasks, cfg.threads,
                  [&](std::size_t begin, std::size_t end, std::size_t) {
                    for (std::size_t t = begin; t < end; ++t) {
                      const std::size_t i = t / cfg.replications;
                      const std::size_t rep = t % cfg.replications;
                      slots[t] = detail::run_replication(cfg, instances[i], i, rep);
                    }
                  });
  ResultTable table;
  for (auto& s : slots) {
    for (auto& r : s) table.rows.push_back(std::move(r));
  }
  return table;
}

inline InstanceSpec sbm_instance(std::string id, SbmSpec spec, double p) {
  spec.validate();
  return {std::move(id), [spec = std::move(spec), p](std::uint64_t seed) {
            return generate_sbm(spec, seed, p);
          }};
}

// For each instance and replication: utilitarian greedy once, then every
// alpha and baseline on the same sketches. A graph file is reused across
// replications; only its sketches change.
inline ResultTable run_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.sbm) return run_instances(cfg, {sbm_instance(cfg.label, *cfg.sbm, cfg.p)});
  LabeledGraph lg = load_graph_file(*cfg.graph_file);
  lg.graph = lg.graph.with_p(cfg.p);
  return run_instances(
      cfg, {{cfg.label, [lg](std::uint64_t) { return lg; }}});
}

inline std::string format_level(double x) {
  return detail::format_number(x);
}

inline SbmSpec connectedness_spec(double q3) {
  return SbmSpec::uniform_between({100, 100, 100}, {0.06, 0.03, q3}, 0.005);
}

inline SbmSpec relative_size_spec(double ratio) {
  const auto big = static_cast<std::size_t>(std::llround(100.0 * ratio));
  return SbmSpec::uniform_between({big, 100}, {0.005, 0.005}, 0.001);
}

// Instances "q3=<level>" for each level.
inline ResultTable relative_connectedness_experiment(const ExperimentConfig& cfg) {
  std::vector<InstanceSpec> instances;
  for (double q3 : cfg.levels) {
    instances.push_back(
        sbm_instance("q3=" + format_level(q3), connectedness_spec(q3), cfg.p));
  }
  return run_instances(cfg, instances);
}

// Instances "ratio=<level>" for each size ratio.
inline ResultTable relative_size_experiment(const ExperimentConfig& cfg) {
  std::vector<InstanceSpec> instances;
  for (double r : cfg.levels) {
    if (!(r >= 1.0)) throw InvalidArgument("size ratios must be >= 1");
    instances.push_back(
        sbm_instance("ratio=" + format_level(r), relative_size_spec(r), cfg.p));
  }
  return run_instances(cfg, instances);
}

inline ResultTable run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case ExperimentKind::kRelativeConnectedness:
      return relative_connectedness_experiment(cfg);
    case ExperimentKind::kRelativeSize:
      return relative_size_experiment(cfg);
    default:
      return run_sweep(cfg);
  }
}

// Sixteen community sizes in [112, 693] summing to 5940, in descending
// order. The probability matrix is supplied by the caller.
inline const std::vector<std::size_t> kSixteenCommunitySizes = {
    693, 612, 540, 488, 451, 420, 398, 367,
    341, 318, 296, 271, 245, 218, 170, 112};

// SBM template with the sixteen sizes above; `probabilities` is a symmetric
// 16 x 16 matrix whose diagonal holds the within-community probabilities.
inline SbmSpec sixteen_community_template(
    const std::vector<std::vector<double>>& probabilities) {
  const std::size_t k = kSixteenCommunitySizes.size();
  if (probabilities.size() != k) {
    throw InvalidArgument("expected a 16 x 16 probability matrix");
  }
  SbmSpec spec;
  spec.community_sizes = kSixteenCommunitySizes;
  spec.between_prob = probabilities;
  for (std::size_t c = 0; c < k; ++c) {
    if (probabilities[c].size() != k) {
      throw InvalidArgument("expected a 16 x 16 probability matrix");
    }
    spec.within_prob.push_back(probabilities[c][c]);
  }
  spec.validate();
  return spec;
}

}  // namespace fairspread

#endif  // FAIRSPREAD_EXPERIMENTS_HPP_
