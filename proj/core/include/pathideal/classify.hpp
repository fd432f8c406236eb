#ifndef PATHIDEAL_CLASSIFY_HPP
#define PATHIDEAL_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "pathideal/graph.hpp"

namespace pathideal {

enum class GraphKind { forest, unicyclic, other };

const char* to_string(GraphKind k);

struct ComponentInfo {
  VertexSet verts;
  GraphKind kind = GraphKind::forest;  // forest = this component is a tree
  std::vector<int> cycle;              // ordered cycle vertices; empty for trees
  VertexSet cycle_mask;
  int root = -1;  // tree root (diameter endpoint, smallest index); -1 otherwise
};

/// Structural classification of (an induced subgraph of) a graph: per
/// component the tree/unicyclic/other kind, the cycle, and rooted-forest
/// levels. Levels are distances to the tree root, or to the cycle for
/// unicyclic components; cycle vertices sit at level 0.
struct CycleStructure {
  GraphKind kind = GraphKind::forest;
  VertexSet domain;
  std::vector<ComponentInfo> components;
  std::vector<int> level;        // per root-graph vertex; -1 outside domain
  std::vector<int> attach_root;  // tree root / nearest cycle vertex; -1 outside

  /// The single unicyclic component, when the structure has exactly one.
  const ComponentInfo* unique_cycle_component() const;
};

CycleStructure classify(const Graph& g);
CycleStructure classify_in(const Graph& g, VertexSet sub);

/// The recursion frame around a deepest leaf z0: its neighbor y0, the sibling
/// leaves z1..zs sharing y0, and the anchor -- the parent x0 when
/// level(z0) >= 2, or the rotated cycle (v2, vm) when z0 hangs directly off
/// the cycle. The cycle is rotated so v1 = y0 and oriented so v2 is the
/// smaller-index cycle neighbor of v1.
struct LeafContext {
  int z0 = -1;
  int y0 = -1;
  std::vector<int> siblings;
  VertexSet sibling_mask;
  int level = 0;
  VertexSet component;

  int x0 = -1;                     // level >= 2 anchor
  std::vector<int> rotated_cycle;  // level == 1 anchor context, v1 first
  int v2 = -1;
  int vm = -1;

  int s() const { return static_cast<int>(siblings.size()); }
  VertexSet removed_leaves() const {  // {z0, z1, ..., zs}
    VertexSet out = sibling_mask;
    out.add(z0);
    return out;
  }
};

/// Picks the maximum-level leaf usable by the recursions (level >= 2 in tree
/// components, level >= 1 in unicyclic ones), smallest index on ties.
/// Returns nullopt when no such leaf exists (bare cycles, isolated vertices,
/// single edges). Throws for kind=other structures.
std::optional<LeafContext> deepest_leaf(const Graph& g, const CycleStructure& cs);

/// Boundary of the cycle and the graph it leaves behind: boundary = N(C)\C,
/// gamma = the induced subgraph on V minus the boundary.
struct BoundaryGamma {
  VertexSet boundary;
  VertexSet gamma_verts;
  InducedSubgraph gamma;
};
BoundaryGamma boundary_and_gamma(const Graph& g, const CycleStructure& cs);

}  // namespace pathideal

#endif
