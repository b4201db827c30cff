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

// Command-line front end: gen-sbm, select, sweep, exact, verify, metrics.
// run_cli() parses and dispatches; the binary only forwards argv. Exit codes:
// 0 success, 1 fixture verification failure or internal error, 2 command-line
// error, 3 file or format error, 4 invalid parameters or exceeded limits.

#ifndef FAIRSPREAD_CLI_HPP_
#define FAIRSPREAD_CLI_HPP_

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fairspread/cascade.hpp"
#include "fairspread/coverage.hpp"
#include "fairspread/errors.hpp"
#include "fairspread/experiments.hpp"
#include "fairspread/fixtures.hpp"
#include "fairspread/graph.hpp"
#include "fairspread/graph_io.hpp"
#include "fairspread/greedy.hpp"
#include "fairspread/saturate.hpp"
#include "fairspread/welfare.hpp"

namespace fairspread {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitFile = 3,
  kExitInvalid = 4,
};

#ifdef FAIRSPREAD_FIXTURE_DIR
inline constexpr const char* kDefaultFixtureDir = FAIRSPREAD_FIXTURE_DIR;
#else
inline constexpr const char* kDefaultFixtureDir = "data/fixtures";
#endif

namespace cli {

inline constexpr std::uint64_t kDcSeedStream = 0xdcb;

struct CommonOptions {
  std::string out;
  std::string format = "text";
  std::size_t threads = 1;
};

struct GenSbmOptions {
  std::string spec;
  std::uint64_t seed = 1;
  double p = 0.25;
};

struct SelectOptions {
  std::string graph;
  std::size_t k = 0;
  std::string method = "welfare";
  double alpha = 0.0;
  std::size_t sketches = kDefaultSketches;
  std::uint64_t seed = 1;
  std::optional<double> p;
  std::optional<double> epsilon;
  double tol = kDefaultSaturateTolerance;
};

struct SweepOptions {
  std::string config;
  std::string meta;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> replications;
  std::optional<std::size_t> sketches;
};

struct ExactOptions {
  std::string graph;
  std::vector<VertexId> seeds;
  std::optional<double> p;
  std::size_t arc_limit = kDefaultExactArcLimit;
};

struct VerifyOptions {
  std::string fixtures = kDefaultFixtureDir;
};

struct MetricsOptions {
  std::vector<double> utilities;
  std::vector<std::size_t> sizes;
  std::vector<double> against;
  std::string graph;
  std::vector<VertexId> seeds;
  bool exact = false;
  std::size_t sketches = kDefaultSketches;
  std::uint64_t seed = 1;
  std::optional<double> p;
  std::vector<double> alphas = kDefaultAlphaGrid;
  double delta = 0.05;
  std::optional<double> epsilon;
};

inline std::string num(double x) { return detail::format_number(x); }

inline std::string join(const std::vector<double>& xs, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += num(xs[i]);
  }
  return s;
}

template <class T>
std::string join_ints(const T& xs, char sep = ' ') {
  std::string s;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) s += sep;
    s += std::to_string(x);
    first = false;
  }
  return s;
}

inline void emit(const CommonOptions& common, std::ostream& out,
                 const std::string& text) {
  if (common.out.empty()) {
    out << text;
  } else {
    write_text_file(common.out, text);
  }
}

// "key: value" lines for each config entry, prefixed by '#'.
inline std::string config_comment(const Json& config) {
  std::string s;
  for (const auto& [key, value] : config.items()) {
    s += "# " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  return s;
}

inline LabeledGraph load_with_p(const std::string& path,
                                const std::optional<double>& p) {
  LabeledGraph lg = load_graph_file(path);
  if (p) lg.graph = lg.graph.with_p(*p);
  return lg;
}

inline Json opt_json(const std::optional<double>& x) {
  return x ? Json(*x) : Json(nullptr);
}

inline std::string run_gen_sbm(const GenSbmOptions& o, const CommonOptions& common) {
  const SbmSpec spec = load_sbm_spec(read_json_file(o.spec));
  const LabeledGraph lg = generate_sbm(spec, o.seed, o.p);
  const Json header = {{"generator", {{"command", "gen-sbm"},
                                      {"spec", sbm_spec_to_json(spec)},
                                      {"seed", o.seed},
                                      {"version", kVersion}}}};
  (void)common;
  return format_graph(lg, header);
}

inline std::string run_select(const SelectOptions& o, const CommonOptions& common) {
  const LabeledGraph lg = load_with_p(o.graph, o.p);
  const std::size_t n = lg.graph.num_vertices();
  detail::check_budget(o.k, n);
  if (o.sketches < 1) throw InvalidArgument("sketch count must be >= 1");
  WelfareParams params = WelfareParams::for_sketches(o.alpha, o.sketches, n);
  if (o.epsilon) params.epsilon = *o.epsilon;
  params.validate();

  const SketchSet sk = sample_sketches(lg.graph, o.sketches, o.seed, common.threads);
  const CoverageOracle oracle(sk, lg.partition, common.threads);
  const Selection im = greedy_utilitarian(oracle, o.k);

  Json extra = Json::object();
  Selection sel;
  if (o.method == "utilitarian") {
    sel = im;
  } else if (o.method == "welfare") {
    sel = greedy_welfare(oracle, o.k, params);
    extra["welfare"] = welfare(sel.utilities, params);
  } else if (o.method == "maximin") {
    const MaximinResult r = saturate_maximin(oracle, o.k, o.tol);
    sel = r.selection;
    extra["gamma_target"] = r.gamma_target;
    extra["gamma"] = r.gamma;
  } else {
    const DcBounds b = dc_lower_bounds(lg.graph, lg.partition, o.k, o.sketches,
                                       stream_seed(o.seed, kDcSeedStream));
    const DcResult r = saturate_dc(oracle, o.k, b, o.tol);
    sel = r.selection;
    extra["bounds"] = b.values;
    extra["feasible"] = r.feasible;
  }
  const double total = total_influence(sel.utilities);
  const double gap = utility_gap(sel.utilities);
  const double im_total = total_influence(im.utilities);
  const double price = im_total > 0.0 ? pof(total, im_total) : 0.0;

  const bool welfare_method = o.method == "welfare";
  const Json config = {
      {"command", "select"},
      {"graph", o.graph},
      {"n", n},
      {"p", lg.graph.p()},
      {"k", o.k},
      {"method", o.method},
      {"alpha", welfare_method ? Json(o.alpha) : Json(nullptr)},
      {"epsilon", welfare_method ? Json(params.epsilon) : Json(nullptr)},
      {"sketches", o.sketches},
      {"seed", o.seed},
      {"tol", o.tol},
      {"threads", common.threads},
      {"tie_break", "lowest vertex id"},
      {"leftover_budget", "total spread"},
      {"version", kVersion}};
  std::vector<VertexId> seeds(sel.seeds.vertices().begin(),
                              sel.seeds.vertices().end());

  if (common.format == "json") {
    Json doc = {{"config", config},
                {"seeds", seeds},
                {"utilities", sel.utilities.values},
                {"sizes", sel.utilities.sizes},
                {"total", total},
                {"gap", gap},
                {"pof", price}};
    for (const auto& [key, value] : extra.items()) doc[key] = value;
    return doc.dump(2) + "\n";
  }
  if (common.format == "csv") {
    std::string s = "method,k,alpha,total,gap,pof,seeds";
    for (std::size_t c = 0; c < sel.utilities.values.size(); ++c) {
      s += ",u_" + std::to_string(c);
    }
    s += "\n" + o.method + "," + std::to_string(o.k) + "," +
         (welfare_method ? num(o.alpha) : std::string()) + "," + num(total) +
         "," + num(gap) + "," + num(price) + "," + join_ints(seeds) + "," +
         join(sel.utilities.values, ',') + "\n";
    return s;
  }
  std::string s = config_comment(config);
  s += "seeds: " + join_ints(seeds) + "\n";
  s += "utilities: " + join(sel.utilities.values) + "\n";
  s += "total: " + num(total) + "\n";
  s += "gap: " + num(gap) + "\n";
  s += "pof: " + num(price) + "\n";
  for (const auto& [key, value] : extra.items()) {
    s += key + ": " + (value.is_array() ? join(value.get<std::vector<double>>())
                       : value.is_boolean() ? (value.get<bool>() ? "true" : "false")
                                            : num(value.get<double>())) + "\n";
  }
  return s;
}

inline std::string format_summary_text(const ResultTable& table) {
  std::ostringstream os;
  os << "instance method alpha k gap(mean sd) pof(mean sd) total(mean)\n";
  for (const auto& s : table.summary()) {
    os << s.instance << ' ' << s.method << ' '
       << (s.alpha ? num(*s.alpha) : std::string("-")) << ' ' << s.k << ' '
       << num(s.gap.mean) << ' ' << num(s.gap.sd) << ' ' << num(s.pof.mean)
       << ' ' << num(s.pof.sd) << ' ' << num(s.total.mean) << '\n';
  }
  return os.str();
}

inline Json table_to_json(const ResultTable& table, const Json& metadata) {
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"instance", r.instance},
                    {"replication", r.replication},
                    {"method", r.method},
                    {"k", r.k},
                    {"alpha", opt_json(r.alpha)},
                    {"gap", r.gap},
                    {"pof", r.pof},
                    {"total", r.total},
                    {"utilities", r.utilities}});
  }
  return {{"metadata", metadata}, {"rows", rows}};
}

// Returns the primary output; the metadata document goes to `meta_out`.
inline std::string run_sweep_command(const SweepOptions& o,
                                     const CommonOptions& common,
                                     std::string& meta_text) {
  ExperimentConfig cfg = load_experiment_config(read_json_file(o.config));
  if (cfg.graph_file && std::filesystem::path(*cfg.graph_file).is_relative()) {
    cfg.graph_file =
        (std::filesystem::path(o.config).parent_path() / *cfg.graph_file).string();
  }
  cfg.threads = common.threads;
  if (o.seed) cfg.master_seed = *o.seed;
  if (o.replications) cfg.replications = *o.replications;
  if (o.sketches) cfg.sketches = *o.sketches;
  const ResultTable table = run_experiment(cfg);
  const Json meta = experiment_metadata(cfg);
  meta_text = meta.dump(2) + "\n";
  if (common.format == "json") return table_to_json(table, meta).dump(2) + "\n";
  if (common.format == "text") return config_comment(meta.at("config")) + format_summary_text(table);
  return format_csv(table);
}

inline std::string run_exact(const ExactOptions& o, const CommonOptions& common) {
  const LabeledGraph lg = load_with_p(o.graph, o.p);
  const SeedSet seeds(o.seeds, lg.graph.num_vertices());
  const bool enumerate = lg.graph.num_edges() * (lg.graph.directed() ? 1 : 2) <= o.arc_limit ||
                         lg.graph.p() == 0.0 || lg.graph.p() == 1.0;
  const UtilityVector u =
      enumerate ? exact_utilities(lg.graph, seeds, lg.partition, o.arc_limit)
                : exact_utilities_pruned(lg.graph, seeds, lg.partition);
  const Json config = {{"command", "exact"},
                       {"graph", o.graph},
                       {"p", lg.graph.p()},
                       {"seeds", o.seeds},
                       {"route", enumerate ? "enumeration" : "pruned"},
                       {"version", kVersion}};
  const double total = total_influence(u);
  const double gap = utility_gap(u);
  if (common.format == "json") {
    return Json{{"config", config}, {"utilities", u.values}, {"sizes", u.sizes},
                {"total", total}, {"gap", gap}}.dump(2) + "\n";
  }
  if (common.format == "csv") {
    std::string s = "total,gap";
    for (std::size_t c = 0; c < u.values.size(); ++c) s += ",u_" + std::to_string(c);
    return s + "\n" + num(total) + "," + num(gap) + "," + join(u.values, ',') + "\n";
  }
  return config_comment(config) + "utilities: " + join(u.values) + "\n" +
         "total: " + num(total) + "\n" + "gap: " + num(gap) + "\n";
}

inline std::string run_verify(const VerifyOptions& o, const CommonOptions& common,
                              bool& passed) {
  const FixtureReport report = verify_fixtures(o.fixtures);
  passed = report.all_passed();
  if (common.format == "json") {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"fixture", c.fixture},
                        {"assertion", c.assertion},
                        {"passed", c.passed},
                        {"detail", c.detail}});
    }
    return Json{{"fixtures", o.fixtures}, {"passed", passed},
                {"failures", report.failures()}, {"checks", checks}}.dump(2) + "\n";
  }
  std::string s;
  for (const auto& c : report.checks) {
    s += std::string(c.passed ? "PASS " : "FAIL ") + c.fixture + ": " + c.assertion;
    if (!c.detail.empty()) s += " (" + c.detail + ")";
    s += "\n";
  }
  s += std::to_string(report.checks.size() - report.failures()) + "/" +
       std::to_string(report.checks.size()) + " checks passed\n";
  return s;
}

inline std::string run_metrics(const MetricsOptions& o, const CommonOptions& common) {
  UtilityVector u;
  Json source;
  std::size_t n = 0;
  if (!o.graph.empty()) {
    const LabeledGraph lg = load_with_p(o.graph, o.p);
    n = lg.graph.num_vertices();
    const SeedSet seeds(o.seeds, n);
    if (o.exact) {
      u = exact_utilities_pruned(lg.graph, seeds, lg.partition);
    } else {
      const SketchSet sk = sample_sketches(lg.graph, o.sketches, o.seed, common.threads);
      u = estimate_utilities(sk, seeds, lg.partition, common.threads);
    }
    source = {{"graph", o.graph}, {"seeds", o.seeds}, {"p", lg.graph.p()},
              {"estimator", o.exact ? "exact" : "sketches"},
              {"sketches", o.exact ? Json(nullptr) : Json(o.sketches)},
              {"seed", o.exact ? Json(nullptr) : Json(o.seed)}};
  } else {
    if (o.utilities.empty()) {
      throw InvalidArgument("metrics needs --utilities or --graph");
    }
    std::vector<std::size_t> sizes = o.sizes;
    if (sizes.empty()) sizes.assign(o.utilities.size(), 1);
    u = {o.utilities, sizes};
    u.validate();
    for (std::size_t s : sizes) n += s;
    source = {{"utilities", o.utilities}, {"sizes", sizes}};
  }
  std::optional<UtilityVector> v;
  if (!o.against.empty()) {
    v = UtilityVector{o.against, u.sizes};
    v->validate();
  }
  const double eps = o.epsilon.value_or(0.5 / static_cast<double>(std::max<std::size_t>(n, 1)));
  Json welfare_rows = Json::array();
  for (double a : o.alphas) {
    const WelfareParams params{a, eps};
    params.validate();
    Json row = {{"alpha", a}, {"welfare", welfare(u, params)}};
    if (v) {
      row["welfare_against"] = welfare(*v, params);
      row["difference"] = welfare(u, params) - welfare(*v, params);
    }
    welfare_rows.push_back(row);
  }
  Json doc = {{"config", {{"command", "metrics"},
                          {"source", source},
                          {"alphas", o.alphas},
                          {"epsilon", eps},
                          {"delta", o.delta},
                          {"version", kVersion}}},
              {"utilities", u.values},
              {"sizes", u.sizes},
              {"total", total_influence(u)},
              {"gap", utility_gap(u)},
              {"min_utility", min_utility(u)},
              {"dp_satisfied", dp_satisfied(u, o.delta)},
              {"welfare", welfare_rows}};
  if (v) {
    const auto cmp = leximin_compare(u, *v);
    doc["against"] = {{"utilities", v->values},
                      {"total", total_influence(*v)},
                      {"gap", utility_gap(*v)},
                      {"leximin", cmp < 0 ? "worse" : cmp > 0 ? "better" : "equal"}};
  }
  if (common.format == "json") return doc.dump(2) + "\n";
  if (common.format == "csv") {
    std::string s = "alpha,welfare";
    if (v) s += ",welfare_against,difference";
    s += "\n";
    for (const auto& r : welfare_rows) {
      s += num(r.at("alpha").get<double>()) + "," + num(r.at("welfare").get<double>());
      if (v) {
        s += "," + num(r.at("welfare_against").get<double>()) + "," +
             num(r.at("difference").get<double>());
      }
      s += "\n";
    }
    return s;
  }
  std::string s = config_comment(doc.at("config"));
  s += "utilities: " + join(u.values) + "\n";
  s += "total: " + num(total_influence(u)) + "\n";
  s += "gap: " + num(utility_gap(u)) + "\n";
  s += "min_utility: " + num(min_utility(u)) + "\n";
  s += std::string("dp_satisfied: ") + (dp_satisfied(u, o.delta) ? "true" : "false") + "\n";
  if (v) {
    s += "against: " + join(v->values) + " (total " + num(total_influence(*v)) +
         ", gap " + num(utility_gap(*v)) + ", leximin " +
         doc["against"]["leximin"].get<std::string>() + ")\n";
  }
  for (const auto& r : welfare_rows) {
    s += "welfare alpha=" + num(r.at("alpha").get<double>()) + ": " +
         num(r.at("welfare").get<double>());
    if (v) s += " difference: " + num(r.at("difference").get<double>());
    s += "\n";
  }
  return s;
}

}  // namespace cli

// Parses `args` (without the program name) and runs one subcommand.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Fair influence maximization under the independent cascade model",
               "fairspread"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  cli::CommonOptions common;
  auto add_common = [&](CLI::App* sub, bool format, const std::string& fmt_default) {
    sub->add_option("--out", common.out, "Write the primary output to this file");
    if (format) {
      sub->add_option("--format", common.format, "Output format")
          ->check(CLI::IsMember({"text", "csv", "json"}))
          ->default_str(fmt_default);
    }
    sub->add_option("--threads", common.threads,
                    "Worker threads (results do not depend on it)")
        ->check(CLI::PositiveNumber);
  };
  auto add_optional = [](CLI::App* sub, const std::string& name, auto& target,
                         const std::string& help) {
    return sub->add_option_function<typename std::decay_t<decltype(target)>::value_type>(
        name, [&target](const auto& x) { target = x; }, help);
  };

  cli::GenSbmOptions gen;
  auto* gen_cmd = app.add_subcommand("gen-sbm", "Sample a stochastic block model graph");
  gen_cmd->add_option("--spec", gen.spec, "SBM spec file")->required();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--p", gen.p, "Activation probability stored in the graph");
  add_common(gen_cmd, false, "");

  cli::SelectOptions sel;
  auto* sel_cmd = app.add_subcommand("select", "Select a seed set");
  sel_cmd->add_option("--graph", sel.graph, "Graph file")->required();
  sel_cmd->add_option("--k", sel.k, "Budget")->required();
  sel_cmd->add_option("--method", sel.method, "Selector")
      ->check(CLI::IsMember({"welfare", "utilitarian", "maximin", "dc"}));
  sel_cmd->add_option("--alpha", sel.alpha, "Inequality aversion (< 1) for welfare");
  sel_cmd->add_option("--sketches", sel.sketches, "Live-edge sketch count");
  sel_cmd->add_option("--seed", sel.seed, "RNG seed for sketches");
  add_optional(sel_cmd, "--p", sel.p, "Override the graph's activation probability")
      ->default_str("graph value");
  add_optional(sel_cmd, "--epsilon", sel.epsilon, "Welfare floor for alpha <= 0")
      ->default_str("1/(2 * sketches * n)");
  sel_cmd->add_option("--tol", sel.tol, "Saturate search tolerance (maximin, dc)");
  add_common(sel_cmd, true, "text");

  cli::SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run an experiment from a config file");
  sweep_cmd->add_option("--config", sweep.config, "Experiment config file")->required();
  sweep_cmd->add_option("--meta", sweep.meta, "Metadata output file")
      ->default_str("<out>.meta.json, or standard error without --out");
  add_optional(sweep_cmd, "--seed", sweep.seed, "Override master_seed")
      ->default_str("config value");
  add_optional(sweep_cmd, "--replications", sweep.replications, "Override replications")
      ->default_str("config value");
  add_optional(sweep_cmd, "--sketches", sweep.sketches, "Override the sketch count")
      ->default_str("config value");
  add_common(sweep_cmd, true, "csv");

  cli::ExactOptions ex;
  auto* ex_cmd = app.add_subcommand("exact", "Exact utilities of a seed set");
  ex_cmd->add_option("--graph", ex.graph, "Graph file")->required();
  ex_cmd->add_option("--seeds", ex.seeds, "Comma-separated seed ids")->delimiter(',');
  add_optional(ex_cmd, "--p", ex.p, "Override the graph's activation probability")
      ->default_str("graph value");
  ex_cmd->add_option("--arc-limit", ex.arc_limit,
                     "Largest arc count for full enumeration; larger graphs use "
                     "the pruned route");
  add_common(ex_cmd, true, "text");

  cli::VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check the bundled counterexample fixtures");
  ver_cmd->add_option("--fixtures", ver.fixtures, "Fixture directory");
  add_common(ver_cmd, true, "text");

  cli::MetricsOptions met;
  auto* met_cmd = app.add_subcommand("metrics", "Fairness metrics of a utility vector");
  met_cmd->add_option("--utilities", met.utilities, "Comma-separated utilities")
      ->delimiter(',');
  met_cmd->add_option("--sizes", met.sizes, "Comma-separated community sizes")
      ->delimiter(',')
      ->default_str("all 1");
  met_cmd->add_option("--against", met.against, "Second utility vector to compare")
      ->delimiter(',');
  met_cmd->add_option("--graph", met.graph, "Graph file (instead of --utilities)");
  met_cmd->add_option("--seeds", met.seeds, "Comma-separated seed ids")->delimiter(',');
  met_cmd->add_flag("--exact", met.exact, "Exact utilities instead of sketches");
  met_cmd->add_option("--sketches", met.sketches, "Live-edge sketch count");
  met_cmd->add_option("--seed", met.seed, "RNG seed for sketches");
  add_optional(met_cmd, "--p", met.p, "Override the graph's activation probability")
      ->default_str("graph value");
  met_cmd->add_option("--alpha", met.alphas, "Comma-separated alphas")->delimiter(',');
  met_cmd->add_option("--delta", met.delta, "Demographic parity threshold");
  add_optional(met_cmd, "--epsilon", met.epsilon, "Welfare floor for alpha <= 0")
      ->default_str("1/(2n)");
  add_common(met_cmd, true, "text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen_cmd) {
      cli::emit(common, out, cli::run_gen_sbm(gen, common));
    } else if (*sel_cmd) {
      cli::emit(common, out, cli::run_select(sel, common));
    } else if (*sweep_cmd) {
      if (!sweep_cmd->count("--format")) common.format = "csv";
      std::string meta;
      cli::emit(common, out, cli::run_sweep_command(sweep, common, meta));
      if (!sweep.meta.empty()) {
        write_text_file(sweep.meta, meta);
      } else if (!common.out.empty()) {
        write_text_file(common.out + ".meta.json", meta);
      } else {
        err << meta;
      }
    } else if (*ex_cmd) {
      cli::emit(common, out, cli::run_exact(ex, common));
    } else if (*ver_cmd) {
      bool passed = false;
      cli::emit(common, out, cli::run_verify(ver, common, passed));
      if (!passed) return kExitFailure;
    } else if (*met_cmd) {
      cli::emit(common, out, cli::run_metrics(met, common));
    }
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFile;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFile;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace fairspread

#endif  // FAIRSPREAD_CLI_HPP_
