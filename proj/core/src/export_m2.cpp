#include "pathideal/export_m2.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "pathideal/errors.hpp"
#include "pathideal/ideal.hpp"

namespace pathideal {

namespace {

bool usable_m2_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

std::vector<std::string> m2_names(const Graph& g, bool& renamed) {
  std::set<std::string> seen;
  bool ok = true;
  for (const std::string& name : g.names)
    if (!usable_m2_name(name) || !seen.insert(name).second) ok = false;
  renamed = !ok;
  if (ok) return g.names;
  std::vector<std::string> out;
  for (int i = 0; i < g.n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

}  // namespace

std::string export_m2_script(const Graph& g, int t, const EngineConfig& cfg) {
  SquarefreeIdeal ideal = path_ideal(g, t);
  std::ostringstream out;
  out << "-- " << t << "-path ideal of a " << g.n << "-vertex graph ("
      << g.edge_count() << " edges); generated by pathideal export-m2\n";

  if (ideal.is_zero()) {
    out << "-- WARNING: the " << t << "-path ideal is zero; nothing to resolve.\n";
    return out.str();
  }

  bool renamed = false;
  std::vector<std::string> names = m2_names(g, renamed);
  if (renamed) {
    out << "-- vertex labels were not valid Macaulay2 identifiers; renamed:\n";
    for (int i = 0; i < g.n; ++i)
      out << "--   " << names[static_cast<std::size_t>(i)] << " = "
          << g.names[static_cast<std::size_t>(i)] << "\n";
  }

  out << "R = ZZ/32003[";
  for (int i = 0; i < g.n; ++i) out << (i ? "," : "") << names[static_cast<std::size_t>(i)];
  out << "];\n";
  out << "I = ideal(";
  bool first_gen = true;
  for (VertexSet gen : ideal.generators()) {
    out << (first_gen ? "" : ",") << "\n  ";
    first_gen = false;
    bool first_var = true;
    for (int v : gen) {
      out << (first_var ? "" : "*") << names[static_cast<std::size_t>(v)];
      first_var = false;
    }
  }
  out << ");\n";
  out << "M = R^1/I;\n";
  out << "<< \"pdim(S/I) = \" << pdim M << endl;\n";
  out << "<< \"reg(S/I)  = \" << regularity M << endl;\n";

  if (t == 3) {
    try {
      InvariantReport rep = invariants(g, Method::automatic, cfg);
      if (rep.pd_quotient && rep.reg_quotient)
        out << "-- expected: pdim(S/I) = " << *rep.pd_quotient << ", reg(S/I) = "
            << *rep.reg_quotient << "  (pd(I) = " << *rep.pd_ideal << ", reg(I) = "
            << *rep.reg_ideal << ")\n";
    } catch (const BudgetError&) {
      out << "-- expected values unavailable (engine budget exceeded)\n";
    }
  } else {
    try {
      PdReg values = pd_reg(ideal, cfg.field, cfg.budget);
      if (values.defined())
        out << "-- expected: pdim(S/I) = " << *values.pd_quotient << ", reg(S/I) = "
            << *values.reg_quotient << "\n";
    } catch (const BudgetError&) {
      out << "-- expected values unavailable (oracle budget exceeded)\n";
    }
  }
  return out.str();
}

}  // namespace pathideal
