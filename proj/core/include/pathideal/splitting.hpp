#ifndef PATHIDEAL_SPLITTING_HPP
#define PATHIDEAL_SPLITTING_HPP

#include <string>
#include <vector>

#include "pathideal/classify.hpp"
#include "pathideal/ideal.hpp"

namespace pathideal {

/// Status of one Tor-vanishing side of a splitting: established syntactically
/// (variable factor or partial_star criterion) or left to the numerical
/// Betti-table verification.
enum class TorCheck { syntactic_pass, oracle_deferred };

/// Decomposition I_3(G) = z0y0*J(z0) + I_3(G \ z0) around a leaf z0, with
/// the intersection built from its closed-form scaffold L(z0).
struct SplitParts {
  SquarefreeIdeal left;          // z0y0 * (x | x in N(y0)\{z0})
  SquarefreeIdeal right;         // I_3(G \ z0)
  SquarefreeIdeal intersection;  // z0y0 * L(z0)
  bool certified = false;        // intersection identity held and the
                                 // decidable Tor check passed
  TorCheck tor_into_left = TorCheck::oracle_deferred;
  TorCheck tor_into_right = TorCheck::oracle_deferred;
  std::vector<std::string> checks;  // human-readable record of what was checked
};

SplitParts leaf_splitting(const Graph& g, const LeafContext& ctx);
SplitParts leaf_splitting_in(const Graph& g, const LeafContext& ctx, VertexSet sub);

/// Level >= 2 scaffold of L(z0):
///   U = (zi zj | 1 <= i < j <= s) + (z1..zs) I_3(G_{z0,2})
///   V = x0 (z1..zs, u in N(x0)\{y0})    + x0 I_3(G_{z0,3})
/// U is the zero ideal when s = 0.
struct Level2Scaffold {
  SquarefreeIdeal U, V;
};
Level2Scaffold scaffold_level2(const Graph& g, const LeafContext& ctx);
Level2Scaffold scaffold_level2_in(const Graph& g, const LeafContext& ctx, VertexSet sub);

/// Level 1 scaffold of L(z0) on a unicyclic component, cycle rotated so the
/// leaf hangs off v1:
///   X = (zi zj) + (z1..zs) I_3(G_{z0,2})
///   Y = v2 (z1..zs, u in N(v2)\N[v1]) + v2 I_3(G_{z0,3})
///   Z = vm (z1..zs, v2, w in N(vm)\N[v1]) + vm I_3(G_{z0,4})
struct Level1Scaffold {
  SquarefreeIdeal X, Y, Z;
};
Level1Scaffold scaffold_level1(const Graph& g, const LeafContext& ctx);
Level1Scaffold scaffold_level1_in(const Graph& g, const LeafContext& ctx, VertexSet sub);

/// The derived subgraphs G_{z0,1..4} of the recursion, as vertex masks.
/// Level >= 2 populates g1..g3, level 1 populates g1..g4.
struct DerivedSubgraphs {
  VertexSet g1, g2, g3, g4;
  bool has_g4 = false;
};
DerivedSubgraphs derived_subgraphs(const Graph& g, const LeafContext& ctx, VertexSet sub);

}  // namespace pathideal

#endif
