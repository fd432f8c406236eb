#include "pathideal/json_io.hpp"

#include <json.hpp>

namespace pathideal {

namespace {

using nlohmann::json;

json names_of(const Graph& g, VertexSet sub) {
  json out = json::array();
  for (int v : sub) out.push_back(g.names[static_cast<std::size_t>(v)]);
  return out;
}

json trace_json(const Graph& g, const std::vector<TraceStep>& trace) {
  json steps = json::array();
  for (const TraceStep& step : trace) {
    json s;
    s["op"] = step.op;
    s["vertices"] = names_of(g, VertexSet(step.subgraph));
    s["n"] = step.n;
    s["method"] = step.method;
    if (!step.detail.empty()) s["detail"] = step.detail;
    if (!step.params.empty()) s["params"] = step.params;
    if (!step.children.empty()) {
      json children = json::array();
      for (const auto& c : step.children)
        children.push_back({{"role", c.role},
                            {"vertices", names_of(g, VertexSet(c.subgraph))},
                            {"value", c.value}});
      s["children"] = children;
    }
    s["result"] = step.result;
    steps.push_back(std::move(s));
  }
  return steps;
}

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json proximal_json(Proximality p) {
  switch (p) {
    case Proximality::yes: return json(true);
    case Proximality::no: return json(false);
    case Proximality::not_applicable: return json(nullptr);
  }
  return json(nullptr);
}

}  // namespace

std::string invariant_report_json(const Graph& g, const InvariantReport& report) {
  json out;
  out["schema"] = 1;
  out["command"] = "invariants";
  out["n"] = g.n;
  out["edge_count"] = g.edge_count();
  out["nu3"] = report.nu3;
  out["pd_ideal"] = opt_int(report.pd_ideal);
  out["reg_ideal"] = opt_int(report.reg_ideal);
  out["pd_quotient"] = opt_int(report.pd_quotient);
  out["reg_quotient"] = opt_int(report.reg_quotient);
  out["proximal"] = proximal_json(report.proximal);
  out["method"] = report.method;
  out["warnings"] = report.warnings;
  out["trace"] = trace_json(g, report.trace);
  return out.dump(2) + "\n";
}

std::string betti_table_json(const BettiTable& table) {
  json out;
  out["schema"] = 1;
  out["field"] = table.field;
  json degrees = json::array();
  for (const auto& [degree, count] : table.generator_degrees())
    degrees.push_back({degree, count});
  out["ideal_degrees"] = degrees;
  json entries = json::array();
  for (const auto& [key, value] : table.entries)
    entries.push_back({key.first, key.second, value});
  out["entries"] = entries;
  out["pd_ideal"] = table.pd_ideal();
  out["reg_ideal"] = table.reg_ideal();
  out["pd_quotient"] = table.pd_quotient();
  out["reg_quotient"] = table.reg_quotient();
  return out.dump(2) + "\n";
}

std::string matching_json(const Graph& g, int t, const MatchingResult& result,
                          const std::string& method) {
  json out;
  out["schema"] = 1;
  out["command"] = "nu";
  out["t"] = t;
  out["nu"] = result.value;
  out["method"] = method;
  json witness = json::array();
  for (VertexSet p : result.witness) witness.push_back(names_of(g, p));
  out["witness"] = witness;
  return out.dump(2) + "\n";
}

std::string verify_summary_json(const VerifySummary& summary) {
  json out;
  out["schema"] = 1;
  out["command"] = "verify";
  out["family"] = to_string(summary.options.family);
  out["n_min"] = summary.options.n_min;
  out["n_max"] = summary.options.n_max;
  out["count"] = summary.options.count;
  out["seed"] = summary.options.seed;
  out["include_triangles"] = summary.options.include_triangles;
  out["fields"] = summary.options.fields;
  out["pass"] = summary.pass;
  out["fail"] = summary.fail;
  out["warn"] = summary.warn;
  out["skip"] = summary.skip;
  out["branch_counts"] = summary.branch_counts;
  out["splitting_equation_checks"] = summary.splitting_equation_checks;
  out["hilbert_checks"] = summary.hilbert_checks;
  out["result"] = summary.ok() ? "pass" : "fail";
  json instances = json::array();
  for (const InstanceReport& rep : summary.instances) {
    json inst;
    inst["index"] = rep.index;
    inst["seed"] = rep.seed;
    inst["n"] = rep.n;
    if (rep.cycle_m) inst["m"] = rep.cycle_m;
    if (rep.branch) inst["branch"] = rep.branch;
    inst["edges"] = rep.edges;
    json checks = json::array();
    for (const CheckResult& c : rep.checks) {
      json cj;
      cj["name"] = c.name;
      cj["status"] = to_string(c.status);
      if (!c.detail.empty()) cj["detail"] = c.detail;
      checks.push_back(std::move(cj));
    }
    inst["checks"] = checks;
    instances.push_back(std::move(inst));
  }
  out["instances"] = instances;
  return out.dump(2) + "\n";
}

std::string conjecture_probe_json(const Graph& g, const ConjectureProbe& probe) {
  json out;
  out["schema"] = 1;
  out["command"] = "probe";
  out["n"] = g.n;
  out["t"] = probe.t;
  out["ideal_is_zero"] = probe.ideal_is_zero;
  out["nu_t"] = probe.nu_t;
  out["reg_quotient"] = opt_int(probe.reg_quotient);
  out["proximal"] = proximal_json(probe.proximal);
  out["predicted"] = opt_int(probe.predicted);
  out["matches"] = probe.matches ? json(*probe.matches) : json(nullptr);
  out["notes"] = probe.notes;
  return out.dump(2) + "\n";
}

}  // namespace pathideal
