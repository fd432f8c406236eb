#include "pathideal/classify.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "pathideal/errors.hpp"

namespace pathideal {

const char* to_string(GraphKind k) {
  switch (k) {
    case GraphKind::forest: return "forest";
    case GraphKind::unicyclic: return "unicyclic";
    case GraphKind::other: return "other";
  }
  return "?";
}

const ComponentInfo* CycleStructure::unique_cycle_component() const {
  const ComponentInfo* found = nullptr;
  for (const auto& c : components)
    if (c.kind == GraphKind::unicyclic) {
      if (found) return nullptr;
      found = &c;
    }
  return found;
}

namespace {

// BFS distances within `sub` from the sources; -1 where unreachable.
void bfs_levels(const Graph& g, VertexSet sub, VertexSet sources, std::vector<int>& level,
                std::vector<int>& attach) {
  std::queue<int> q;
  for (int v : sources) {
    level[v] = 0;
    attach[v] = v;
    q.push(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.adj_mask[v] & sub) {
      if (level[w] >= 0) continue;
      level[w] = level[v] + 1;
      attach[w] = attach[v];
      q.push(w);
    }
  }
}

// The unique cycle of a connected component with |E| = |V|: strip leaves,
// then walk the 2-core in index-deterministic order.
std::vector<int> extract_cycle(const Graph& g, VertexSet comp) {
  VertexSet core = comp;
  for (;;) {
    VertexSet next = core;
    for (int v : core)
      if (g.degree_in(v, core) <= 1) next.remove(v);
    if (next == core) break;
    core = next;
  }
  std::vector<int> cycle;
  int start = core.lowest();
  int prev = -1, cur = start;
  do {
    cycle.push_back(cur);
    int next = -1;
    for (int w : g.adj_mask[cur] & core)
      if (w != prev) {
        next = w;
        break;
      }
    prev = cur;
    cur = next;
  } while (cur != start);
  return cycle;
}

// Diameter endpoint with the smallest index (all-pairs BFS; components are
// capped at 63 vertices so this is cheap).
int tree_root(const Graph& g, VertexSet comp) {
  int best = -1, diameter = -1;
  std::array<int, 64> dist{};
  for (int v : comp) {
    dist.fill(-1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(v)] = 0;
    q.push(v);
    int ecc = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      ecc = std::max(ecc, dist[static_cast<std::size_t>(u)]);
      for (int w : g.adj_mask[u] & comp)
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
    }
    if (ecc > diameter) {
      diameter = ecc;
      best = v;
    }
  }
  return best;
}

}  // namespace

CycleStructure classify_in(const Graph& g, VertexSet sub) {
  CycleStructure cs;
  cs.domain = sub;
  cs.level.assign(static_cast<std::size_t>(g.n), -1);
  cs.attach_root.assign(static_cast<std::size_t>(g.n), -1);

  bool any_other = false, any_cycle = false;
  for (VertexSet comp : components_in(g, sub)) {
    ComponentInfo info;
    info.verts = comp;
    std::size_t v_count = static_cast<std::size_t>(comp.count());
    std::size_t e_count = g.edge_count_in(comp);
    if (e_count == v_count - 1) {
      info.kind = GraphKind::forest;
      info.root = tree_root(g, comp);
      bfs_levels(g, comp, VertexSet::single(info.root), cs.level, cs.attach_root);
    } else if (e_count == v_count) {
      info.kind = GraphKind::unicyclic;
      any_cycle = true;
      info.cycle = extract_cycle(g, comp);
      for (int v : info.cycle) info.cycle_mask.add(v);
      bfs_levels(g, comp, info.cycle_mask, cs.level, cs.attach_root);
    } else {
      info.kind = GraphKind::other;
      any_other = true;
    }
    cs.components.push_back(std::move(info));
  }

  cs.kind = any_other      ? GraphKind::other
            : any_cycle    ? GraphKind::unicyclic
                           : GraphKind::forest;
  return cs;
}

CycleStructure classify(const Graph& g) { return classify_in(g, g.vertices()); }

std::optional<LeafContext> deepest_leaf(const Graph& g, const CycleStructure& cs) {
  if (cs.kind == GraphKind::other)
    throw ValidationError("deepest_leaf requires every component to be a tree or unicyclic");

  VertexSet sub = cs.domain;
  int best = -1, best_level = -1;
  const ComponentInfo* best_comp = nullptr;
  for (const auto& comp : cs.components) {
    int min_level = comp.kind == GraphKind::unicyclic ? 1 : 2;
    for (int v : comp.verts) {
      if (g.degree_in(v, sub) != 1) continue;
      int lv = cs.level[static_cast<std::size_t>(v)];
      if (lv < min_level) continue;
      if (lv > best_level || (lv == best_level && v < best)) {
        best = v;
        best_level = lv;
        best_comp = &comp;
      }
    }
  }
  if (best < 0) return std::nullopt;

  LeafContext ctx;
  ctx.z0 = best;
  ctx.level = best_level;
  ctx.component = best_comp->verts;
  ctx.y0 = (g.adj_mask[best] & sub).lowest();

  VertexSet y0_nbrs = g.adj_mask[ctx.y0] & sub;
  for (int w : y0_nbrs) {
    if (w == ctx.z0) continue;
    if (g.degree_in(w, sub) == 1 && cs.level[static_cast<std::size_t>(w)] == best_level) {
      ctx.siblings.push_back(w);
      ctx.sibling_mask.add(w);
    }
  }

  VertexSet anchors = y0_nbrs - ctx.sibling_mask;
  anchors.remove(ctx.z0);
  if (ctx.level >= 2) {
    // The parent of y0, one level up.
    if (anchors.count() != 1 || cs.level[static_cast<std::size_t>(anchors.lowest())] !=
                                    cs.level[static_cast<std::size_t>(ctx.y0)] - 1)
      throw ValidationError("leaf context invariant violated at level >= 2");
    ctx.x0 = anchors.lowest();
  } else {
    // z0 hangs directly off the cycle; rotate so v1 = y0, orient so v2 is
    // the smaller-index cycle neighbor of v1.
    const std::vector<int>& cyc = best_comp->cycle;
    int m = static_cast<int>(cyc.size());
    int pos = static_cast<int>(std::find(cyc.begin(), cyc.end(), ctx.y0) - cyc.begin());
    int fwd = cyc[static_cast<std::size_t>((pos + 1) % m)];
    int bwd = cyc[static_cast<std::size_t>((pos + m - 1) % m)];
    int dir = fwd < bwd ? 1 : -1;
    ctx.rotated_cycle.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
      ctx.rotated_cycle.push_back(cyc[static_cast<std::size_t>(((pos + dir * k) % m + m) % m)]);
    ctx.v2 = ctx.rotated_cycle[1];
    ctx.vm = ctx.rotated_cycle.back();
    VertexSet expected = ctx.sibling_mask;
    expected.add(ctx.z0);
    expected.add(ctx.v2);
    expected.add(ctx.vm);
    if (!(y0_nbrs == expected))
      throw ValidationError("leaf context invariant violated at level 1");
  }
  return ctx;
}

BoundaryGamma boundary_and_gamma(const Graph& g, const CycleStructure& cs) {
  const ComponentInfo* uc = cs.unique_cycle_component();
  if (cs.kind != GraphKind::unicyclic || !uc)
    throw ValidationError("boundary_and_gamma requires a graph with exactly one cycle");
  BoundaryGamma out;
  out.boundary = neighborhood_in(g, uc->cycle_mask, false, cs.domain);
  out.gamma_verts = cs.domain - out.boundary;
  out.gamma = induced_subgraph(g, out.gamma_verts);
  return out;
}

}  // namespace pathideal
