#ifndef PATHIDEAL_MATCHING_HPP
#define PATHIDEAL_MATCHING_HPP

#include <unordered_map>
#include <vector>

#include "pathideal/classify.hpp"
#include "pathideal/graph.hpp"

namespace pathideal {

/// A t-path induced matching realizing nu: pairwise disjoint path supports
/// whose union induces exactly those paths.
struct MatchingResult {
  int value = 0;
  std::vector<VertexSet> witness;
};

struct MatchingBudget {
  int max_vertices = 26;       // exact search is exponential past desk scale
  std::size_t max_candidates = 20000;
};

/// Exact nu_t by backtracking over induced t-path supports, verifying the
/// induced condition on the union of all chosen paths simultaneously.
MatchingResult nu_t_bruteforce(const Graph& g, int t, const MatchingBudget& budget = {});
MatchingResult nu_t_bruteforce_in(const Graph& g, int t, VertexSet sub,
                                  const MatchingBudget& budget = {});

/// Memo for the nu_3 recursion, keyed by induced-subgraph mask of one root
/// graph.
using Nu3Memo = std::unordered_map<std::uint64_t, int>;

/// nu_3 by the deepest-leaf recursion: additive over components, closed forms
/// for bare paths and cycles (m >= 4), brute force for residual graphs with
/// n <= 8 and for components whose cycle is a triangle. Every component must
/// be a tree or unicyclic.
int nu3_recursive(const Graph& g, const CycleStructure& cs);
int nu3_recursive_in(const Graph& g, VertexSet sub, Nu3Memo* memo = nullptr);

/// nu_3(G) == nu_3(Gamma_G(C))? Requires a connected unicyclic graph.
bool is_3_proximal(const Graph& g, const CycleStructure& cs);

/// Same comparison for any graph whose structure has exactly one cycle
/// (the recursion applies it to derived subgraphs that may be disconnected).
bool is_3_proximal_relaxed(const Graph& g, const CycleStructure& cs);

/// True iff the induced subgraph on every support is a t-vertex path and the
/// union has no extra edges (the witness validity condition).
bool valid_induced_path_matching(const Graph& g, int t, const std::vector<VertexSet>& paths,
                                 VertexSet sub);

}  // namespace pathideal

#endif
