#ifndef PATHIDEAL_IDEAL_HPP
#define PATHIDEAL_IDEAL_HPP

#include <string>
#include <vector>

#include "pathideal/graph.hpp"

namespace pathideal {

/// Squarefree monomial ideal given by its minimal generating set. Generators
/// are supports (VertexSet) over a variable universe shared with a Graph.
///
/// The zero ideal is the empty generator set and is a first-class value;
/// every operation defines its zero behavior. A generator with empty support
/// is the monomial 1, i.e. the unit ideal (only ever produced by partial_star
/// on ideals with linear generators).
class SquarefreeIdeal {
 public:
  SquarefreeIdeal() = default;
  static SquarefreeIdeal zero(int nvars) { return SquarefreeIdeal(nvars, {}); }
  static SquarefreeIdeal from_generators(int nvars, std::vector<VertexSet> gens);

  int nvars() const { return nvars_; }
  const std::vector<VertexSet>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_.front().empty(); }

  /// Union of generator supports.
  VertexSet support() const;

  /// Membership of a squarefree monomial: some generator divides it.
  bool contains_monomial(VertexSet m) const;

  /// Ideal containment a <= this (every generator of a is divisible by one
  /// of ours). Throws on universe mismatch.
  bool contains_ideal(const SquarefreeIdeal& a) const;

  bool operator==(const SquarefreeIdeal&) const = default;

  /// One generator per line, sorted variable labels joined by '*'.
  std::string to_text(const std::vector<std::string>& names) const;

 private:
  SquarefreeIdeal(int nvars, std::vector<VertexSet> gens)
      : nvars_(nvars), gens_(std::move(gens)) {}
  int nvars_ = 0;
  std::vector<VertexSet> gens_;  // minimal, sorted by (degree, mask)
};

SquarefreeIdeal sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b);
SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b);
SquarefreeIdeal colon_var(const SquarefreeIdeal& a, int v);
/// m * a (supports get unioned with m; callers here always pass m disjoint
/// from the generators, but that is not required).
SquarefreeIdeal scale(const SquarefreeIdeal& a, VertexSet m);
/// Ideal generated by all f/x for generators f and variables x | f.
SquarefreeIdeal partial_star(const SquarefreeIdeal& a);

/// Sufficient syntactic check that the inclusion a -> b is Tor-vanishing:
/// either a = x*K for a variable x dividing every generator with K <= b
/// (the inclusion then factors through multiplication by x), or
/// partial_star(a) <= b. Throws unless a <= b.
bool tor_vanishing_sufficient(const SquarefreeIdeal& a, const SquarefreeIdeal& b);

/// The t-path ideal I_t of (an induced subgraph of) g, over g's full
/// variable universe.
SquarefreeIdeal path_ideal(const Graph& g, int t);
SquarefreeIdeal path_ideal_in(const Graph& g, int t, VertexSet sub);

/// I_3(G) : y computed from the neighborhood formula
///   (uv | u != v in N(y)) + (uw | u in N(y), w in N(u)\N[y]) + I_3(G\N[y]).
/// Contract: equals colon_var(path_ideal(g, 3), y).
SquarefreeIdeal colon_by_vertex_formula(const Graph& g, int y);
SquarefreeIdeal colon_by_vertex_formula_in(const Graph& g, int y, VertexSet sub);

}  // namespace pathideal

#endif
