//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/report_json.h"

#include <limits>
#include <stdexcept>
#include <string>

#include "btr/construct.h"
#include "btr/graph.h"

namespace btr {

Json count_json(BigCount value) {
  if (value <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(value);
  return to_string(value);
}

Json to_json(const Quantity &q) {
  if (q.exact)
    return count_json(*q.exact);
  return q.value;
}

Json to_json(const RamseyValue &v) {
  Json j;
  j["lower"] = v.lower;
  j["upper"] = v.upper;
  j["exact"] = v.exact;
  j["source"] = to_string(v.source);
  j["formula"] = v.formula;
  if (!v.note.empty())
    j["note"] = v.note;
  return j;
}

Json to_json(const RamseyProvenance &p) {
  Json j;
  j["role"] = p.role;
  j["pattern"] = p.pattern;
  j["t"] = p.t;
  j["value"] = to_json(p.value);
  return j;
}

Json to_json(const BoundReport &r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["which"] = r.which;
  const bool measured = r.verdict != Verdict::kPremiseUnmet;
  j["lhs"] = measured ? to_json(r.lhs) : Json(nullptr);
  j["rhs"] = measured ? to_json(r.rhs) : Json(nullptr);
  j["margin"] = measured ? Json(r.margin) : Json(nullptr);
  j["tol"] = measured ? Json(r.tol) : Json(nullptr);
  j["verdict"] = to_string(r.verdict);
  if (r.witness) {
    j["witness"] = { { "kind", r.witness->kind }, { "vertices", r.witness->vertices } };
  }
  Json prov = Json::array();
  for (const auto &p : r.ramsey_provenance)
    prov.push_back(to_json(p));
  j["ramsey_provenance"] = std::move(prov);
  j["details"] = r.details;
  return j;
}

Json to_json(const Schedule &s) {
  Json j;
  j["t0"] = s.t0;
  j["cooling"] = s.cooling;
  j["tabu"] = s.tabu;
  j["plateau"] = s.plateau;
  j["dense_refresh"] = s.dense_refresh;
  j["power_tol"] = s.power_tol;
  return j;
}

Json to_json(const ConstraintSet &c) {
  Json arr = Json::array();
  for (const Graph &h : c.subgraphs)
    arr.push_back({ { "type", "subgraph" }, { "graph6", encode_graph6(h) } });
  for (const Graph &h : c.induced)
    arr.push_back({ { "type", "induced" }, { "graph6", encode_graph6(h) } });
  for (const KstConstraint &k : c.induced_kst)
    arr.push_back({ { "type", "induced_kst" }, { "s", k.s }, { "t", k.t } });
  return arr;
}

Json to_json(const SearchConfig &c) {
  Json j;
  j["n"] = c.n;
  j["constraints"] = to_json(c.constraints);
  j["budget"] = c.budget;
  j["restarts"] = c.restarts;
  j["seed"] = c.seed;
  j["schedule"] = to_json(c.schedule);
  j["node_budget"] = c.limits.node_budget;
  return j;
}

Json to_json(const SearchRecord &r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "search_record";
  j["n"] = r.best.order();
  j["best_graph6"] = encode_graph6(r.best);
  j["best_lambda"] = r.best_lambda;
  j["best_edges"] = r.best.edge_count();
  Json trace = Json::array();
  for (const TracePoint &p : r.trace)
    trace.push_back({ { "step", p.step }, { "lambda", p.lambda } });
  j["trace"] = std::move(trace);
  j["seed"] = r.seed;
  j["moves_used"] = r.moves_used;
  j["best_restart"] = r.best_restart;
  j["resets"] = r.resets;
  j["improved"] = r.improved();
  j["config"] = to_json(r.config);
  return j;
}

Json to_json(const ScanOrderResult &r) {
  Json j;
  j["n"] = r.n;
  j["scanned"] = r.scanned;
  j["feasible"] = r.feasible;
  if (r.best) {
    j["best_graph6"] = encode_graph6(*r.best);
    j["best_lambda"] = r.best_lambda;
  }
  if (!r.histogram.empty()) {
    Json h = Json::object();
    for (const auto &[name, verdicts] : r.histogram) {
      Json v = Json::object();
      for (const auto &[verdict, count] : verdicts)
        v[verdict] = count;
      h[name] = std::move(v);
    }
    j["histogram"] = std::move(h);
  }
  Json viol = Json::array();
  for (const auto &v : r.violations)
    viol.push_back({ { "graph6", v.graph6 }, { "report", to_json(v.report) } });
  j["violations"] = std::move(viol);
  j["errors"] = r.errors;
  j["failed_graphs"] = r.failed_graphs;
  j["errored_graphs"] = r.errored_graphs;
  if (!r.error_samples.empty())
    j["error_samples"] = r.error_samples;
  return j;
}

namespace {

Graph graph_field(const Json &c, const std::string &where) {
  if (c.contains("graph6") && c["graph6"].is_string())
    return parse_graph6(c["graph6"].get<std::string>());
  if (c.contains("name") && c["name"].is_string()) {
    if (auto g = named_graph(c["name"].get<std::string>()))
      return *g;
    throw std::invalid_argument(where + ": unknown graph name");
  }
  throw std::invalid_argument(where + ": needs graph6 or name");
}

template <class T>
T get_number(const Json &j, const char *key, T fallback, bool required = false) {
  if (!j.contains(key)) {
    if (required)
      throw std::invalid_argument(std::string("missing key '") + key + "'");
    return fallback;
  }
  const Json &v = j[key];
  if constexpr (std::is_floating_point_v<T>) {
    if (!v.is_number())
      throw std::invalid_argument(std::string("'") + key + "' must be a number");
  } else {
    if (!v.is_number_integer())
      throw std::invalid_argument(std::string("'") + key + "' must be an integer");
  }
  return v.get<T>();
}

}  // namespace

SearchConfig search_config_from_json(const Json &j) {
  if (!j.is_object())
    throw std::invalid_argument("search config must be a JSON object");
  static const char *known[] = { "n", "constraints", "budget", "restarts", "seed",
                                 "schedule", "node_budget", "jobs" };
  for (const auto &[key, value] : j.items()) {
    bool ok = false;
    for (const char *k : known)
      ok = ok || key == k;
    if (!ok)
      throw std::invalid_argument("unknown key '" + key + "'");
  }

  SearchConfig cfg;
  cfg.n = get_number<int>(j, "n", 0, true);
  cfg.budget = get_number<std::int64_t>(j, "budget", cfg.budget);
  cfg.restarts = get_number<int>(j, "restarts", cfg.restarts);
  cfg.seed = get_number<std::uint64_t>(j, "seed", cfg.seed);
  cfg.limits.node_budget = get_number<std::int64_t>(j, "node_budget", cfg.limits.node_budget);
  cfg.jobs = get_number<int>(j, "jobs", cfg.jobs);
  if (cfg.n < 2 || cfg.n > kDefaultOrderCap)
    throw std::invalid_argument("'n' must be in [2, 4096]");
  if (cfg.budget <= 0)
    throw std::invalid_argument("'budget' must be positive");
  if (cfg.restarts < 1)
    throw std::invalid_argument("'restarts' must be >= 1");

  if (j.contains("constraints")) {
    const Json &arr = j["constraints"];
    if (!arr.is_array())
      throw std::invalid_argument("'constraints' must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const Json &c = arr[i];
      const std::string where = "constraints[" + std::to_string(i) + "]";
      if (!c.is_object() || !c.contains("type") || !c["type"].is_string())
        throw std::invalid_argument(where + ": needs a string 'type'");
      const std::string type = c["type"].get<std::string>();
      if (type == "subgraph") {
        cfg.constraints.subgraphs.push_back(graph_field(c, where));
      } else if (type == "induced") {
        cfg.constraints.induced.push_back(graph_field(c, where));
      } else if (type == "induced_kst") {
        KstConstraint k { get_number<int>(c, "s", 0, true), get_number<int>(c, "t", 0, true) };
        if (k.s < 1 || k.t < 1)
          throw std::invalid_argument(where + ": s and t must be >= 1");
        cfg.constraints.induced_kst.push_back(k);
      } else {
        throw std::invalid_argument(where + ": unknown type '" + type + "'");
      }
    }
  }

  if (j.contains("schedule")) {
    const Json &s = j["schedule"];
    if (!s.is_object())
      throw std::invalid_argument("'schedule' must be an object");
    Schedule &sch = cfg.schedule;
    sch.t0 = get_number<double>(s, "t0", sch.t0);
    sch.cooling = get_number<double>(s, "cooling", sch.cooling);
    sch.tabu = get_number<int>(s, "tabu", sch.tabu);
    sch.plateau = get_number<int>(s, "plateau", sch.plateau);
    sch.dense_refresh = get_number<int>(s, "dense_refresh", sch.dense_refresh);
    sch.power_tol = get_number<double>(s, "power_tol", sch.power_tol);
    if (!(sch.t0 > 0) || !(sch.cooling > 0 && sch.cooling <= 1) || sch.tabu < 0
        || sch.plateau < 1 || sch.dense_refresh < 1 || !(sch.power_tol > 0))
      throw std::invalid_argument("invalid 'schedule' values");
  }
  return cfg;
}

}  // namespace btr
