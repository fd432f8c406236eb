#include "pathideal/ideal.hpp"

#include <algorithm>

#include "pathideal/errors.hpp"

namespace pathideal {

namespace {

void canonicalize(std::vector<VertexSet>& gens) {
  std::sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits() < b.bits();
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Sorted by degree, so a divisor always precedes its multiples.
  std::vector<VertexSet> minimal;
  for (VertexSet g : gens) {
    bool redundant = false;
    for (VertexSet m : minimal)
      if (m.subset_of(g)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  gens = std::move(minimal);
}

void require_same_universe(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (a.nvars() != b.nvars())
    throw ValidationError("ideal operation on mismatched variable universes");
}

}  // namespace

SquarefreeIdeal SquarefreeIdeal::from_generators(int nvars, std::vector<VertexSet> gens) {
  canonicalize(gens);
  return SquarefreeIdeal(nvars, std::move(gens));
}

VertexSet SquarefreeIdeal::support() const {
  VertexSet s;
  for (VertexSet g : gens_) s |= g;
  return s;
}

bool SquarefreeIdeal::contains_monomial(VertexSet m) const {
  for (VertexSet g : gens_)
    if (g.subset_of(m)) return true;
  return false;
}

bool SquarefreeIdeal::contains_ideal(const SquarefreeIdeal& a) const {
  require_same_universe(*this, a);
  for (VertexSet g : a.gens_)
    if (!contains_monomial(g)) return false;
  return true;
}

std::string SquarefreeIdeal::to_text(const std::vector<std::string>& names) const {
  std::string out;
  for (VertexSet g : gens_) {
    bool first = true;
    for (int v : g) {
      if (!first) out += '*';
      out += names[static_cast<std::size_t>(v)];
      first = false;
    }
    if (g.empty()) out += '1';
    out += '\n';
  }
  return out;
}

SquarefreeIdeal sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  require_same_universe(a, b);
  std::vector<VertexSet> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return SquarefreeIdeal::from_generators(a.nvars(), std::move(gens));
}

SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  require_same_universe(a, b);
  // Pairwise lcms (= support unions), then minimalize.
  std::vector<VertexSet> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (VertexSet x : a.generators())
    for (VertexSet y : b.generators()) gens.push_back(x | y);
  return SquarefreeIdeal::from_generators(a.nvars(), std::move(gens));
}

SquarefreeIdeal colon_var(const SquarefreeIdeal& a, int v) {
  std::vector<VertexSet> gens;
  gens.reserve(a.generators().size());
  for (VertexSet g : a.generators()) {
    VertexSet h = g;
    h.remove(v);
    gens.push_back(h);
  }
  return SquarefreeIdeal::from_generators(a.nvars(), std::move(gens));
}

SquarefreeIdeal scale(const SquarefreeIdeal& a, VertexSet m) {
  std::vector<VertexSet> gens;
  gens.reserve(a.generators().size());
  for (VertexSet g : a.generators()) gens.push_back(g | m);
  return SquarefreeIdeal::from_generators(a.nvars(), std::move(gens));
}

SquarefreeIdeal partial_star(const SquarefreeIdeal& a) {
  std::vector<VertexSet> gens;
  for (VertexSet g : a.generators())
    for (int v : g) {
      VertexSet h = g;
      h.remove(v);
      gens.push_back(h);
    }
  return SquarefreeIdeal::from_generators(a.nvars(), std::move(gens));
}

bool tor_vanishing_sufficient(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (!b.contains_ideal(a))
    throw ValidationError("tor_vanishing_sufficient requires a to be contained in b");
  if (a.is_zero()) return true;

  // Variables dividing every generator: a = x*K, and the inclusion factors
  // through multiplication by x whenever K <= b.
  VertexSet common = VertexSet::full(a.nvars());
  for (VertexSet g : a.generators()) common &= g;
  for (int x : common)
    if (b.contains_ideal(colon_var(a, x))) return true;

  return b.contains_ideal(partial_star(a));
}

SquarefreeIdeal path_ideal_in(const Graph& g, int t, VertexSet sub) {
  // Supports of t-paths all have degree t, so the set is already minimal.
  return SquarefreeIdeal::from_generators(g.n, enumerate_t_paths_in(g, t, sub));
}

SquarefreeIdeal path_ideal(const Graph& g, int t) { return path_ideal_in(g, t, g.vertices()); }

SquarefreeIdeal colon_by_vertex_formula_in(const Graph& g, int y, VertexSet sub) {
  std::vector<VertexSet> gens;
  VertexSet ny = g.adj_mask[y] & sub;
  VertexSet closed_ny = ny;
  closed_ny.add(y);
  for (int u : ny) {
    for (int v : ny)
      if (u < v) gens.push_back(VertexSet::single(u) | VertexSet::single(v));
    for (int w : (g.adj_mask[u] & sub) - closed_ny)
      gens.push_back(VertexSet::single(u) | VertexSet::single(w));
  }
  SquarefreeIdeal pairs = SquarefreeIdeal::from_generators(g.n, std::move(gens));
  return sum(pairs, path_ideal_in(g, 3, sub - closed_ny));
}

SquarefreeIdeal colon_by_vertex_formula(const Graph& g, int y) {
  return colon_by_vertex_formula_in(g, y, g.vertices());
}

}  // namespace pathideal
