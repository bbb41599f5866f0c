//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/cli.h"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "btr/bounds.h"
#include "btr/checks.h"
#include "btr/construct.h"
#include "btr/counting.h"
#include "btr/graph_io.h"
#include "btr/parallel.h"
#include "btr/ramsey.h"
#include "btr/report_json.h"
#include "btr/search.h"
#include "btr/spectral.h"

namespace btr::cli {
namespace {

class UsageError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string checks;
  std::string h = "K3";
  int s = 2;
  int t = 2;
  int r = 2;
  std::string k = "2";
  double prop3_k = 2.0;
  std::optional<double> theorem_k;
  std::string variant = "vertex";
  int jobs = 0;
  double tol = 1e-10;
  std::vector<std::string> ramsey_upper;
  std::int64_t node_budget = SearchLimits {}.node_budget;
  std::string out;
  bool pretty = false;
  std::string manifest;
  bool no_timestamp = false;
};

std::vector<int> int_list(const std::string &csv, const char *what) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw UsageError(std::string("bad integer '") + item + "' in " + what);
    }
  }
  return out;
}

Graph graph_arg(const std::string &text) {
  if (auto g = named_graph(text))
    return *g;
  try {
    return parse_graph6(text);
  } catch (const ParseError &e) {
    throw UsageError("'" + text + "' is neither a named graph nor graph6: " + e.what());
  }
}

BoundContext make_context(const Options &o) {
  BoundContext ctx;
  ctx.spectral.tol = o.tol;
  ctx.limits.node_budget = o.node_budget;
  if (o.ramsey_upper.size() % 3 != 0)
    throw UsageError("--ramsey-upper takes H t V");
  for (std::size_t i = 0; i < o.ramsey_upper.size(); i += 3) {
    const Graph h = graph_arg(o.ramsey_upper[i]);
    const auto t = int_list(o.ramsey_upper[i + 1], "--ramsey-upper");
    const auto v = int_list(o.ramsey_upper[i + 2], "--ramsey-upper");
    if (t.size() != 1 || v.size() != 1 || t[0] < 1 || v[0] < 1)
      throw UsageError("--ramsey-upper needs positive integers t and V");
    try {
      ctx.ramsey.add_user_bound(h, t[0], v[0]);
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
  }
  return ctx;
}

CheckConfig make_check_config(const Options &o) {
  CheckConfig cfg;
  cfg.h = graph_arg(o.h);
  cfg.s = o.s;
  cfg.t = o.t;
  cfg.r = o.r;
  cfg.k = int_list(o.k, "--k");
  cfg.prop3_k = o.prop3_k;
  cfg.theorem_k = o.theorem_k;
  if (o.variant == "vertex")
    cfg.variant = Lemma1Variant::kVertex;
  else if (o.variant == "pair")
    cfg.variant = Lemma1Variant::kNonadjacentPair;
  else
    throw UsageError("--variant must be vertex or pair");
  if (cfg.s < 2 || cfg.t < 2 || cfg.r < 2)
    throw UsageError("--s, --t and --r must be >= 2");
  for (int k : cfg.k)
    if (k < 2 || k > 8)
      throw UsageError("--k values must lie in [2, 8]");
  if (cfg.h.order() < 2)
    throw UsageError("--H needs at least two vertices");
  return cfg;
}

std::vector<std::string> check_list(const std::string &csv) {
  try {
    return parse_check_list(csv);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

void add_check_options(CLI::App *cmd, Options &o) {
  cmd->add_option("--checks", o.checks, "Comma list of checks, or 'all'");
  cmd->add_option("--H", o.h, "Forbidden graph H (name or graph6)");
  cmd->add_option("--s", o.s, "Parameter s");
  cmd->add_option("--t", o.t, "Parameter t");
  cmd->add_option("--r", o.r, "Clique parameter r (th0)");
  cmd->add_option("--k", o.k, "Moment orders for prop2");
  cmd->add_option("--K", o.prop3_k, "Constant K for prop3");
  cmd->add_option("--theorem-K", o.theorem_k, "Override K for th0/th1");
  cmd->add_option("--variant", o.variant, "lemma1 removal: vertex or pair");
}

void add_common_options(CLI::App *cmd, Options &o) {
  cmd->add_option("--jobs", o.jobs, "Worker threads (0 = hardware)");
  cmd->add_option("--tol", o.tol, "Eigensolver tolerance");
  cmd->add_option("--ramsey-upper", o.ramsey_upper, "User bound R(H,K_t) <= V")
      ->expected(3)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  cmd->add_option("--node-budget", o.node_budget, "Pattern search node budget");
  cmd->add_option("--out", o.out, "Output file (default stdout)");
  cmd->add_flag("--pretty", o.pretty, "Human-readable output");
  cmd->add_option("--manifest", o.manifest, "Write a run manifest here");
  cmd->add_flag("--no-timestamp", o.no_timestamp, "Omit wall time from the manifest");
}

std::string fnv1a(const std::string &text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class Output {
public:
  Output(const std::string &path, std::ostream &fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw UsageError("cannot write '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream &stream() { return *os_; }

private:
  std::ofstream file_;
  std::ostream *os_;
};

void write_manifest(const Options &o, const std::string &command,
                    const std::vector<std::string> &inputs, const Json &config,
                    std::int64_t items, const Json &counts, double wall) {
  if (o.manifest.empty())
    return;
  Json m;
  m["schema"] = kSchemaVersion;
  m["kind"] = "manifest";
  m["command"] = command;
  m["inputs"] = inputs;
  m["config"] = config;
  m["config_digest"] = fnv1a(config.dump());
  m["tool_version"] = BTR_VERSION;
  if (!o.no_timestamp)
    m["wall_time_s"] = wall;
  m["items"] = items;
  m["verdict_counts"] = counts;
  std::ofstream f(o.manifest);
  if (!f)
    throw UsageError("cannot write '" + o.manifest + "'");
  f << m.dump() << '\n';
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// analyze -----------------------------------------------------------------

struct AnalyzeOptions {
  std::string input;
  bool full_spectrum = false;
  std::string is_sizes = "2,3";
  std::string moments = "1,2,3,4";
};

struct ItemResult {
  Json line;
  bool failed = false;
  bool errored = false;
};

ItemResult analyze_one(const GraphRecord &rec, std::size_t index, const AnalyzeOptions &a,
                       const std::vector<std::string> &checks, const CheckConfig &cfg,
                       const BoundContext &ctx, const std::vector<int> &is_sizes,
                       const std::vector<int> &moment_ks) {
  const Graph &g = rec.graph;
  ItemResult res;
  Json &j = res.line;
  Json warnings = Json::array();
  Json errors = Json::array();
  j["schema"] = kSchemaVersion;
  j["kind"] = "analysis";
  j["index"] = index;
  j["line"] = rec.line;
  j["graph6"] = encode_graph6(g);
  j["order"] = g.order();
  j["size"] = g.edge_count();

  const GraphFacts facts(g, ctx.spectral);
  try {
    if (a.full_spectrum) {
      SpectralOptions opts = ctx.spectral;
      opts.mode = SpectralMode::kDenseFull;
      const SpectralSummary full = full_spectrum(g, opts);
      j["lambda"] = full.lambda;
      j["spectral_method"] = to_string(full.method);
      j["residual"] = full.residual;
      j["spectrum"] = *full.eigenvalues;
      if (full.cw4)
        j["cw4"] = *full.cw4;
    } else {
      const SpectralSummary &sp = facts.spectrum();
      j["lambda"] = sp.lambda;
      j["spectral_method"] = to_string(sp.method);
      j["residual"] = sp.residual;
    }
  } catch (const std::exception &e) {
    j["lambda"] = nullptr;
    errors.push_back({ { "field", "lambda" }, { "message", e.what() } });
  }

  j["c4"] = count_c4(g);
  j["k3"] = count_triangles(g);
  j["omega"] = facts.omega();
  Json is_counts = Json::object();
  for (int s : is_sizes) {
    try {
      is_counts[std::to_string(s)] = count_json(independent_set_count(g, s, ctx.limits));
    } catch (const BudgetExceeded &e) {
      is_counts[std::to_string(s)] = nullptr;
      warnings.push_back({ { "field", "i_" + std::to_string(s) }, { "message", e.what() } });
    }
  }
  j["is_counts"] = std::move(is_counts);
  Json moments = Json::object();
  for (int k : moment_ks)
    moments[std::to_string(k)] = count_json(pair_degree_moment(g, k));
  j["pair_moments"] = std::move(moments);

  Json reports = Json::array();
  for (const auto &name : checks) {
    try {
      for (const BoundReport &r : run_check(name, facts, cfg, ctx)) {
        if (r.verdict == Verdict::kFails)
          res.failed = true;
        reports.push_back(to_json(r));
      }
    } catch (const std::exception &e) {
      res.errored = true;
      errors.push_back({ { "check", name }, { "message", e.what() } });
    }
  }
  j["checks"] = std::move(reports);
  if (!errors.empty())
    res.errored = true;
  j["errors"] = std::move(errors);
  if (!warnings.empty())
    j["warnings"] = std::move(warnings);
  return res;
}

void print_pretty_analysis(std::ostream &os, const Json &j) {
  os << "graph " << j["index"].get<std::size_t>() << " (line " << j["line"].get<std::size_t>()
     << "): n=" << j["order"] << " m=" << j["size"] << " lambda=";
  if (j["lambda"].is_number())
    os << std::setprecision(12) << j["lambda"].get<double>();
  else
    os << "n/a";
  os << " c4=" << j["c4"] << " k3=" << j["k3"] << " omega=" << j["omega"] << '\n';
  for (const auto &r : j["checks"]) {
    os << "  " << std::left << std::setw(16) << r["which"].get<std::string>() << std::setw(14)
       << r["verdict"].get<std::string>();
    if (r["margin"].is_number())
      os << " margin=" << std::setprecision(10) << r["margin"].get<double>();
    os << '\n';
  }
  for (const auto &e : j["errors"])
    os << "  error: " << e.dump() << '\n';
}

int cmd_analyze(const Options &o, const AnalyzeOptions &a, std::ostream &out, std::ostream &err) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto checks = check_list(o.checks);
  const CheckConfig cfg = make_check_config(o);
  const BoundContext ctx = make_context(o);
  const auto is_sizes = int_list(a.is_sizes, "--is");
  const auto moment_ks = int_list(a.moments, "--moments");
  for (int s : is_sizes)
    if (s < 1)
      throw UsageError("--is sizes must be >= 1");
  for (int k : moment_ks)
    if (k < 1 || k > 8)
      throw UsageError("--moments must lie in [1, 8]");

  std::vector<GraphRecord> items;
  if (std::filesystem::is_regular_file(a.input)) {
    std::ifstream f(a.input);
    if (!f)
      throw UsageError("cannot open '" + a.input + "'");
    try {
      items = read_graphs(f);
    } catch (const ParseError &e) {
      err << "error: " << a.input << ": " << e.what() << '\n';
      return kExitUsage;
    }
  } else if (auto g = named_graph(a.input)) {
    items.push_back({ *g, 1 });
  } else {
    throw UsageError("cannot open '" + a.input + "' (not a file or a named graph)");
  }

  std::vector<ItemResult> results(items.size());
  parallel_chunks(static_cast<std::int64_t>(items.size()), o.jobs, 1,
                  [&](std::int64_t b, std::int64_t e) {
                    for (std::int64_t i = b; i < e; ++i)
                      results[i] = analyze_one(items[i], static_cast<std::size_t>(i), a, checks,
                                               cfg, ctx, is_sizes, moment_ks);
                  });

  Output sink(o.out, out);
  std::int64_t pass = 0, fail = 0, error = 0;
  for (const ItemResult &r : results) {
    if (o.pretty)
      print_pretty_analysis(sink.stream(), r.line);
    else
      sink.stream() << r.line.dump() << '\n';
    if (r.failed)
      ++fail;
    else if (r.errored)
      ++error;
    else
      ++pass;
  }

  Json config;
  config["checks"] = checks;
  config["H"] = encode_graph6(cfg.h);
  config["s"] = cfg.s;
  config["t"] = cfg.t;
  config["r"] = cfg.r;
  config["k"] = cfg.k;
  config["K"] = cfg.prop3_k;
  config["theorem_K"] = cfg.theorem_k ? Json(*cfg.theorem_k) : Json(nullptr);
  config["variant"] = o.variant;
  config["tol"] = o.tol;
  config["full_spectrum"] = a.full_spectrum;
  config["ramsey_upper"] = o.ramsey_upper;
  write_manifest(o, "analyze", { a.input }, config, static_cast<std::int64_t>(results.size()),
                 { { "pass", pass }, { "fail", fail }, { "error", error } }, seconds_since(t0));
  return fail + error > 0 ? kExitCheckFailed : kExitOk;
}

// search ------------------------------------------------------------------

struct SearchOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::int64_t log_every = 0;
};

int cmd_search(const Options &o, const SearchOptions &so, std::ostream &out, std::ostream &err) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ifstream f(so.config);
  if (!f)
    throw UsageError("cannot open '" + so.config + "'");
  SearchConfig cfg;
  try {
    const Json j = Json::parse(f);
    cfg = search_config_from_json(j);
  } catch (const Json::exception &e) {
    throw UsageError(so.config + ": " + e.what());
  } catch (const std::invalid_argument &e) {
    throw UsageError(so.config + ": " + e.what());
  } catch (const ParseError &e) {
    throw UsageError(so.config + ": " + e.what());
  }
  if (so.seed)
    cfg.seed = *so.seed;
  cfg.jobs = o.jobs;
  cfg.log_every = so.log_every;
  cfg.limits.node_budget = o.node_budget;

  std::mutex log_mutex;
  SearchRecord rec;
  try {
    rec = local_search(cfg, [&](int restart, std::int64_t step, double best) {
      std::lock_guard lock(log_mutex);
      err << "restart=" << restart << " step=" << step << " best_lambda=" << std::setprecision(12)
          << best << '\n';
    });
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }

  Output sink(o.out, out);
  const Json j = to_json(rec);
  if (o.pretty) {
    sink.stream() << "best_lambda " << std::setprecision(12) << rec.best_lambda << "\nbest_graph6 "
                  << encode_graph6(rec.best) << "\nedges " << rec.best.edge_count()
                  << "\nmoves_used " << rec.moves_used << "\nimprovements " << rec.trace.size()
                  << '\n';
  } else {
    sink.stream() << j.dump() << '\n';
  }
  write_manifest(o, "search", { so.config }, to_json(cfg), 1,
                 { { "improved", rec.improved() ? 1 : 0 }, { "not_improved", rec.improved() ? 0 : 1 } },
                 seconds_since(t0));
  return rec.improved() ? kExitOk : kExitNoImprovement;
}

// enumerate ---------------------------------------------------------------

struct EnumerateOptions {
  int n = 0;
  bool max_lambda = false;
  std::vector<std::string> forbid;
  std::vector<std::string> forbid_induced;
  std::vector<std::string> forbid_induced_kst;
};

int cmd_enumerate(const Options &o, const EnumerateOptions &eo, std::ostream &out) {
  const auto t0 = std::chrono::steady_clock::now();
  if (eo.n < 1 || eo.n > kScanMaxOrder)
    throw UsageError("--n must lie in [1, 7]: order 8 would scan 2^28 labeled graphs");
  ScanConfig cfg;
  cfg.n_min = eo.n;
  cfg.n_max = eo.n;
  cfg.objective = eo.max_lambda ? ScanObjective::kMaxLambda : ScanObjective::kVerify;
  cfg.checks = check_list(o.checks.empty() ? std::string("prop1") : o.checks);
  cfg.check_config = make_check_config(o);
  cfg.ctx = make_context(o);
  cfg.jobs = o.jobs;
  for (const auto &s : eo.forbid)
    cfg.constraints.subgraphs.push_back(graph_arg(s));
  for (const auto &s : eo.forbid_induced)
    cfg.constraints.induced.push_back(graph_arg(s));
  for (const auto &s : eo.forbid_induced_kst) {
    const auto v = int_list(s, "--forbid-induced-kst");
    if (v.size() != 2 || v[0] < 1 || v[1] < 1)
      throw UsageError("--forbid-induced-kst takes s,t");
    cfg.constraints.induced_kst.push_back({ v[0], v[1] });
  }

  const auto results = exhaustive_scan(cfg);
  const ScanOrderResult &r = results.front();
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "enumerate";
  j["objective"] = eo.max_lambda ? "max_lambda" : "verify";
  j["checks"] = eo.max_lambda ? Json::array() : Json(cfg.checks);
  j["constraints"] = to_json(cfg.constraints);
  const Json scan = to_json(r);
  for (const auto &[key, value] : scan.items())
    j[key] = value;
  const std::int64_t violations = static_cast<std::int64_t>(r.violations.size());
  j["violation_count"] = violations;
  j["zero_violations"] = violations == 0;

  Output sink(o.out, out);
  if (o.pretty) {
    sink.stream() << "n=" << r.n << " scanned=" << r.scanned << " feasible=" << r.feasible
                  << " violations=" << violations << " errors=" << r.errors << '\n';
    if (r.best)
      sink.stream() << "best " << encode_graph6(*r.best) << " lambda=" << std::setprecision(12)
                    << r.best_lambda << '\n';
    for (const auto &[name, verdicts] : r.histogram) {
      sink.stream() << "  " << name;
      for (const auto &[v, c] : verdicts)
        sink.stream() << ' ' << v << '=' << c;
      sink.stream() << '\n';
    }
  } else {
    sink.stream() << j.dump() << '\n';
  }

  Json config;
  config["n"] = eo.n;
  config["objective"] = j["objective"];
  config["checks"] = j["checks"];
  config["constraints"] = j["constraints"];
  const std::int64_t skipped = r.scanned - r.feasible;
  write_manifest(o, "enumerate", {}, config, r.scanned,
                 { { "pass", r.feasible - r.failed_graphs - r.errored_graphs },
                   { "fail", r.failed_graphs },
                   { "error", r.errored_graphs },
                   { "skipped", skipped } },
                 seconds_since(t0));
  return violations > 0 || r.errors > 0 ? kExitCheckFailed : kExitOk;
}

// ramsey ------------------------------------------------------------------

struct RamseyOptions {
  std::string h;
  int t = 0;
  std::string mode = "auto";
  int n_max = kRamseyBruteForceMaxOrder;
};

int cmd_ramsey(const Options &o, const RamseyOptions &ro, std::ostream &out) {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph h = graph_arg(ro.h);
  const BoundContext ctx = make_context(o);
  if (ro.t < 1)
    throw UsageError("t must be >= 1");
  RamseyValue v;
  if (ro.mode == "auto") {
    v = ctx.ramsey.lookup(h, ro.t);
  } else if (ro.mode == "table") {
    bool complete = h.edge_count() == static_cast<std::int64_t>(h.order()) * (h.order() - 1) / 2;
    const RamseyTableEntry *e = complete ? ctx.ramsey.table().find(h.order(), ro.t) : nullptr;
    if (!e)
      throw UsageError("no table entry for this pattern and t");
    v = { e->value, e->value, true, RamseySource::kTable,
          "R(" + std::to_string(e->p) + "," + std::to_string(e->t) + ")", e->note };
  } else if (ro.mode == "brute") {
    try {
      v = ramsey_brute_force(h, ro.t, ro.n_max, ctx.ramsey, o.jobs);
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
  } else {
    throw UsageError("--mode must be auto, table or brute");
  }

  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "ramsey";
  j["pattern"] = encode_graph6(h);
  j["t"] = ro.t;
  j["mode"] = ro.mode;
  const Json value_json = to_json(v);
  for (const auto &[key, value] : value_json.items())
    j[key] = value;

  Output sink(o.out, out);
  if (o.pretty) {
    sink.stream() << "R(" << ro.h << ", K" << ro.t << ") ";
    if (v.exact)
      sink.stream() << "= " << v.lower;
    else
      sink.stream() << "in [" << v.lower << ", " << v.upper << "]";
    sink.stream() << "  source=" << to_string(v.source) << " formula=" << v.formula;
    if (!v.note.empty())
      sink.stream() << " note=\"" << v.note << '"';
    sink.stream() << '\n';
  } else {
    sink.stream() << j.dump() << '\n';
  }
  Json config = { { "pattern", j["pattern"] }, { "t", ro.t }, { "mode", ro.mode }, { "n_max", ro.n_max } };
  write_manifest(o, "ramsey", {}, config, 1, { { v.exact ? "exact" : "interval", 1 } },
                 seconds_since(t0));
  return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app { "btr: spectral Turan bound toolkit" };
  app.set_version_flag("--version", std::string("btr ") + BTR_VERSION);
  app.require_subcommand(1);

  Options o;
  AnalyzeOptions ao;
  auto *analyze = app.add_subcommand("analyze", "Analyze graphs and verify inequalities");
  analyze->add_option("input", ao.input, "graph6 / edge-list file or named graph")->required();
  analyze->add_flag("--full-spectrum", ao.full_spectrum, "Emit the full spectrum");
  analyze->add_option("--is", ao.is_sizes, "Independent set sizes to count");
  analyze->add_option("--moments", ao.moments, "Pair-degree moment orders");
  add_check_options(analyze, o);
  add_common_options(analyze, o);

  SearchOptions so;
  auto *search = app.add_subcommand("search", "Extremal local search from a JSON config");
  search->add_option("config", so.config, "Search config (JSON)")->required();
  search->add_option("--seed", so.seed, "Override the config seed");
  search->add_option("--log-every", so.log_every, "Progress line interval (moves)");
  add_common_options(search, o);

  EnumerateOptions eo;
  auto *enumerate = app.add_subcommand("enumerate", "Exhaustive scan of one order (<= 7)");
  enumerate->add_option("--n", eo.n, "Order")->required();
  enumerate->add_flag("--max-lambda", eo.max_lambda, "Report the extremal graph instead");
  enumerate->add_option("--forbid", eo.forbid, "Forbidden subgraph (repeatable)");
  enumerate->add_option("--forbid-induced", eo.forbid_induced, "Forbidden induced subgraph");
  enumerate->add_option("--forbid-induced-kst", eo.forbid_induced_kst, "Forbidden induced K_{s,t}");
  add_check_options(enumerate, o);
  add_common_options(enumerate, o);

  RamseyOptions ro;
  auto *ramsey = app.add_subcommand("ramsey", "Ramsey number R(H, K_t)");
  ramsey->add_option("H", ro.h, "Pattern (name or graph6)")->required();
  ramsey->add_option("t", ro.t, "Clique size")->required();
  ramsey->add_option("--mode", ro.mode, "auto, table or brute");
  ramsey->add_option("--n-max", ro.n_max, "Brute-force order cap (<= 7)");
  add_common_options(ramsey, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze)
      return cmd_analyze(o, ao, out, err);
    if (*search)
      return cmd_search(o, so, out, err);
    if (*enumerate)
      return cmd_enumerate(o, eo, out);
    if (*ramsey)
      return cmd_ramsey(o, ro, out);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace btr::cli
