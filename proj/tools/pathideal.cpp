#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pathideal/errors.hpp"
#include "pathideal/export_m2.hpp"
#include "pathideal/json_io.hpp"
#include "pathideal/random_gen.hpp"
#include "pathideal/verify.hpp"

namespace {

using namespace pathideal;

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open input '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
  std::string text = read_input(path);
  if (format == "edge-list") return parse_edge_list(text);
  if (format == "graph6") return parse_graph6(text);
  return parse_graph(text);
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  int lo = std::stoi(text.substr(0, dots));
  int hi = std::stoi(text.substr(dots + 2));
  if (lo > hi) throw ValidationError("empty range '" + text + "'");
  return {lo, hi};
}

struct CommonGraphOptions {
  std::string input = "-";
  std::string format = "auto";
  void attach(CLI::App* cmd) {
    cmd->add_option("--input", input, "edge-list or graph6 file, '-' for stdin");
    cmd->add_option("--format", format, "auto|edge-list|graph6")
        ->check(CLI::IsMember({"auto", "edge-list", "graph6"}));
  }
};

void attach_budget(CLI::App* cmd, OracleBudget& budget) {
  cmd->add_option("--max-lattice", budget.max_lattice,
                  "cap on distinct generator-support unions");
  cmd->add_option("--max-width", budget.max_slice_width,
                  "cap on the width of a homology slice");
}

int run(int argc, char** argv) {
  CLI::App app{"homological invariants of t-path ideals of trees and unicyclic graphs"};
  app.require_subcommand(1);

  // ---- invariants ----
  CommonGraphOptions inv_in;
  std::string inv_method = "auto";
  EngineConfig inv_cfg;
  bool inv_text = false;
  auto* inv = app.add_subcommand("invariants", "nu3, pd and reg of I_3(G) with derivation trace");
  inv_in.attach(inv);
  inv->add_option("--method", inv_method, "auto|recursion|oracle|closed-form")
      ->check(CLI::IsMember({"auto", "recursion", "oracle", "closed-form"}));
  inv->add_option("--field", inv_cfg.field, "prime field for oracle computations");
  inv->add_option("--fallback-n", inv_cfg.fallback_n,
                  "components at or below this size go to the oracle");
  attach_budget(inv, inv_cfg.budget);
  inv->add_flag("--text", inv_text, "human-readable summary instead of JSON");
  inv->add_flag("--json", [](std::int64_t) {}, "emit JSON (default)");

  // ---- betti ----
  CommonGraphOptions betti_in;
  int betti_t = 3;
  std::int64_t betti_field = 2;
  OracleBudget betti_budget;
  auto* betti = app.add_subcommand("betti", "exact Betti table of I_t(G) over GF(p)");
  betti_in.attach(betti);
  betti->add_option("--t", betti_t, "path length (default 3)");
  betti->add_option("--field", betti_field, "prime field order");
  attach_budget(betti, betti_budget);

  // ---- nu ----
  CommonGraphOptions nu_in;
  int nu_t = 3;
  std::string nu_method = "auto";
  bool nu_json = false;
  auto* nu = app.add_subcommand("nu", "t-path induced matching number");
  nu_in.attach(nu);
  nu->add_option("--t", nu_t, "path length (default 3)");
  nu->add_option("--method", nu_method, "auto|recursion|bruteforce")
      ->check(CLI::IsMember({"auto", "recursion", "bruteforce"}));
  nu->add_flag("--json", nu_json, "emit JSON");

  // ---- verify ----
  VerifyOptions vopt;
  std::string v_family = "tree", v_range;
  bool v_json = false, v_verbose = false, v_no_balance = false;
  std::vector<std::int64_t> v_fields;
  auto* verify = app.add_subcommand("verify", "batch verification on seeded random instances");
  verify->add_option("--family", v_family, "tree|unicyclic")
      ->check(CLI::IsMember({"tree", "unicyclic"}));
  verify->add_option("--n", v_range, "vertex-count range, e.g. 5..13");
  verify->add_option("--count", vopt.count, "number of instances");
  verify->add_option("--seed", vopt.seed, "master seed");
  verify->add_option("--field", v_fields, "prime field (repeatable; default 2 and 32003)");
  verify->add_option("--fallback-n", vopt.fallback_n, "engine oracle-fallback size");
  verify->add_option("--threads", vopt.threads, "worker threads (0 = hardware)");
  verify->add_flag("--include-triangles", vopt.include_triangles,
                   "allow m=3 cycles (their closed-form deviations are warnings)");
  verify->add_flag("--no-branch-balance", v_no_balance,
                   "disable steering part of the run at the regularity branches");
  verify->add_flag("--json", v_json, "emit the full JSON report");
  verify->add_flag("--verbose", v_verbose, "per-instance check lines in text mode");

  // ---- gen ----
  std::string g_family = "tree", g_range = "8";
  int g_count = 1;
  std::uint64_t g_seed = 1;
  auto* gen = app.add_subcommand("gen", "emit seeded random instances as edge-list text");
  gen->add_option("--family", g_family, "tree|unicyclic")
      ->check(CLI::IsMember({"tree", "unicyclic"}));
  gen->add_option("--n", g_range, "vertex-count range");
  gen->add_option("--count", g_count, "number of instances");
  gen->add_option("--seed", g_seed, "master seed");

  // ---- export-m2 ----
  CommonGraphOptions m2_in;
  int m2_t = 3;
  EngineConfig m2_cfg;
  auto* m2 = app.add_subcommand("export-m2", "emit a Macaulay2 cross-validation script");
  m2_in.attach(m2);
  m2->add_option("--t", m2_t, "path length (default 3)");
  attach_budget(m2, m2_cfg.budget);

  // ---- probe ----
  CommonGraphOptions probe_in;
  int probe_t = 4;
  EngineConfig probe_cfg;
  bool probe_text = false;
  auto* probe = app.add_subcommand(
      "probe", "experimental t >= 4 regularity-conjecture probe (oracle + brute force)");
  probe_in.attach(probe);
  probe->add_option("--t", probe_t, "path length (default 4)");
  probe->add_option("--field", probe_cfg.field, "prime field order");
  attach_budget(probe, probe_cfg.budget);
  probe->add_flag("--text", probe_text, "human-readable summary instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (inv->parsed()) {
    Graph g = load_graph(inv_in.input, inv_in.format);
    InvariantReport rep = invariants(g, method_from_string(inv_method), inv_cfg);
    if (inv_text) {
      std::cout << "n=" << g.n << " nu3=" << rep.nu3 << " method=" << rep.method << "\n";
      auto show = [](const char* k, const std::optional<int>& v) {
        std::cout << k << "=" << (v ? std::to_string(*v) : "undefined") << " ";
      };
      show("pd(I)", rep.pd_ideal);
      show("reg(I)", rep.reg_ideal);
      show("pd(S/I)", rep.pd_quotient);
      show("reg(S/I)", rep.reg_quotient);
      std::cout << "proximal=" << to_string(rep.proximal) << "\n";
      for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
    } else {
      std::cout << invariant_report_json(g, rep);
    }
    return 0;
  }
  if (betti->parsed()) {
    Graph g = load_graph(betti_in.input, betti_in.format);
    SquarefreeIdeal ideal = path_ideal(g, betti_t);
    std::cout << betti_table_json(betti_table(ideal, betti_field, betti_budget));
    return 0;
  }
  if (nu->parsed()) {
    Graph g = load_graph(nu_in.input, nu_in.format);
    MatchingResult result;
    std::string method_used = nu_method;
    if (nu_method == "bruteforce" || (nu_method == "auto" && nu_t != 3)) {
      result = nu_t_bruteforce(g, nu_t);
      method_used = "bruteforce";
    } else {
      if (nu_t != 3) throw ValidationError("the recursion is specific to t = 3");
      result.value = nu3_recursive(g, classify(g));
      method_used = "recursion";  // value-only; witnesses come from brute force
    }
    if (nu_json)
      std::cout << matching_json(g, nu_t, result, method_used);
    else
      std::cout << "nu_" << nu_t << " = " << result.value << " (" << method_used << ")\n";
    return 0;
  }
  if (verify->parsed()) {
    vopt.family = family_from_string(v_family);
    if (!v_fields.empty()) vopt.fields = v_fields;
    vopt.branch_balance = !v_no_balance;
    if (v_range.empty()) v_range = vopt.family == Family::tree ? "5..13" : "6..13";
    std::tie(vopt.n_min, vopt.n_max) = parse_range(v_range);
    VerifySummary summary = run_verify(vopt);
    if (v_json)
      std::cout << verify_summary_json(summary);
    else
      std::cout << format_verify_text(summary, v_verbose);
    return summary.ok() ? 0 : 1;
  }
  if (gen->parsed()) {
    auto [lo, hi] = parse_range(g_range);
    Family family = family_from_string(g_family);
    for (int i = 0; i < g_count; ++i) {
      std::mt19937_64 rng(derive_seed(g_seed, static_cast<std::uint64_t>(i)));
      std::uniform_int_distribution<int> pick_n(std::max(lo, family == Family::tree ? 1 : 3), hi);
      Graph g = family == Family::tree ? random_tree(pick_n(rng), rng)
                                       : random_unicyclic(pick_n(rng), rng);
      if (g_count > 1) std::cout << "# instance " << i << "\n";
      std::cout << to_edge_list(g);
      if (i + 1 < g_count) std::cout << "\n";
    }
    return 0;
  }
  if (m2->parsed()) {
    Graph g = load_graph(m2_in.input, m2_in.format);
    std::cout << export_m2_script(g, m2_t, m2_cfg);
    return 0;
  }
  if (probe->parsed()) {
    Graph g = load_graph(probe_in.input, probe_in.format);
    ConjectureProbe result = conjecture_probe(g, probe_t, probe_cfg);
    if (probe_text) {
      std::cout << "t=" << result.t << " nu_t=" << result.nu_t;
      if (result.reg_quotient) std::cout << " reg(S/I_t)=" << *result.reg_quotient;
      if (result.predicted) std::cout << " predicted=" << *result.predicted;
      std::cout << " proximal=" << to_string(result.proximal);
      if (result.matches) std::cout << " matches=" << (*result.matches ? "yes" : "no");
      std::cout << "\n";
      for (const auto& note : result.notes) std::cout << "note: " << note << "\n";
    } else {
      std::cout << conjecture_probe_json(g, result);
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
