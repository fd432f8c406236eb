#ifndef PATHIDEAL_GRAPH_HPP
#define PATHIDEAL_GRAPH_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pathideal/vertexset.hpp"

namespace pathideal {

inline constexpr int kMaxVertices = 63;

/// Labeled simple undirected graph on dense indices 0..n-1.
/// Adjacency is stored both as sorted lists and as bit masks; no self-loops,
/// no parallel edges.
struct Graph {
  int n = 0;
  std::vector<std::string> names;
  std::vector<std::vector<int>> adj;
  std::vector<VertexSet> adj_mask;

  VertexSet vertices() const { return VertexSet::full(n); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int degree_in(int v, VertexSet sub) const { return (adj_mask[v] & sub).count(); }
  bool has_edge(int u, int v) const { return adj_mask[u].contains(v); }
  std::size_t edge_count() const;
  std::size_t edge_count_in(VertexSet sub) const;

  /// Index of a label, or -1.
  int index_of(std::string_view name) const;
};

/// Builds a graph from edges given as index pairs; validates simplicity.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                  std::vector<std::string> names = {});

/// Edge-list text: one "u v" pair per line, '#' starts a comment, labels are
/// arbitrary whitespace-free tokens interned in first-appearance order.
/// Rejects self-loops and duplicate edges.
Graph parse_edge_list(std::string_view text);

/// graph6 payload (optionally preceded by the ">>graph6<<" header).
/// Vertices get synthetic labels v0..v{n-1}.
Graph parse_graph6(std::string_view text);

/// Auto-detects the format: lines with whitespace-separated tokens are read
/// as an edge list, a single token as graph6.
Graph parse_graph(std::string_view text);

/// Renders the edge list back out (one edge per line, for `gen`).
std::string to_edge_list(const Graph& g);

Graph make_path(int m);
Graph make_cycle(int m);

/// Open or closed neighborhood of a set, restricted to `sub`.
VertexSet neighborhood(const Graph& g, VertexSet u, bool closed);
VertexSet neighborhood_in(const Graph& g, VertexSet u, bool closed, VertexSet sub);

/// Connected components, ordered by smallest member index.
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components_in(const Graph& g, VertexSet sub);

/// Induced subgraph together with the index remapping in both directions.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;    // new index -> parent index
  std::vector<int> from_parent;  // parent index -> new index, -1 if dropped
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

/// Supports of t-paths of the induced subgraph on `sub`, deduplicated
/// (reversal and support-sharing paths collapse to one entry). For fixed t
/// this is the minimal generating set of the t-path ideal.
std::vector<VertexSet> enumerate_t_paths(const Graph& g, int t);
std::vector<VertexSet> enumerate_t_paths_in(const Graph& g, int t, VertexSet sub);

/// True iff the induced subgraph on `sub` contains a t-path (cheap, O(n) for
/// t = 3: some vertex has two neighbors inside `sub`).
bool has_t_path(const Graph& g, int t, VertexSet sub);

}  // namespace pathideal

#endif
