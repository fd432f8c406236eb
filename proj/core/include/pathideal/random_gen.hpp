#ifndef PATHIDEAL_RANDOM_GEN_HPP
#define PATHIDEAL_RANDOM_GEN_HPP

#include <cstdint>
#include <random>

#include "pathideal/graph.hpp"
#include "pathideal/ideal.hpp"

namespace pathideal {

/// Stable per-instance seed derivation, so instance streams are reproducible
/// and independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Uniform random labeled tree via a Pruefer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

/// Random unicyclic graph: uniform random tree plus one closing non-edge
/// (always yields exactly one cycle).
Graph random_unicyclic(int n, std::mt19937_64& rng);

/// Cycle 0..m-1 with a pendant path of `stalk` extra vertices at vertex 0.
Graph cycle_with_stalk(int m, int stalk);

/// Cycle 0..m-1 with the remaining n-m vertices attached as a random forest.
Graph cycle_with_random_forest(int n, int m, std::mt19937_64& rng);

/// Random minimalized nonzero squarefree ideal on nvars variables.
SquarefreeIdeal random_squarefree_ideal(int nvars, int max_degree, int gen_count,
                                        std::mt19937_64& rng);

/// Relabeled copy: vertex v of g becomes perm[v].
Graph permute_graph(const Graph& g, const std::vector<int>& perm);

}  // namespace pathideal

#endif
