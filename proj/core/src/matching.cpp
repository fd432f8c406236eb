#include "pathideal/matching.hpp"

#include <algorithm>

#include "pathideal/errors.hpp"

namespace pathideal {

namespace {

// The induced subgraph on `support` is a simple path: connected, t vertices,
// t-1 edges, max degree 2.
bool induces_path(const Graph& g, VertexSet support, VertexSet sub) {
  VertexSet inside = support & sub;
  int t = inside.count();
  std::size_t edges = 0;
  int deg1 = 0;
  for (int v : inside) {
    int d = g.degree_in(v, inside);
    if (d > 2) return false;
    if (d == 1) ++deg1;
    edges += static_cast<std::size_t>(d);
  }
  edges /= 2;
  if (edges != static_cast<std::size_t>(t - 1)) return false;
  if (t >= 2 && deg1 != 2) return false;  // path endpoints; also rules out disconnected
  return components_in(g, inside).size() == 1;
}

struct CliqueSearch {
  const std::vector<std::vector<char>>* compatible;
  std::vector<int> best, current;

  void run(const std::vector<int>& avail) {
    if (current.size() + avail.size() <= best.size()) return;  // bound
    if (current.size() > best.size()) best = current;
    for (std::size_t k = 0; k < avail.size(); ++k) {
      int i = avail[k];
      std::vector<int> next;
      for (std::size_t l = k + 1; l < avail.size(); ++l)
        if ((*compatible)[static_cast<std::size_t>(i)][static_cast<std::size_t>(avail[l])])
          next.push_back(avail[l]);
      current.push_back(i);
      run(next);
      current.pop_back();
      if (current.size() + (avail.size() - k - 1) <= best.size()) return;
    }
  }
};

}  // namespace

bool valid_induced_path_matching(const Graph& g, int t, const std::vector<VertexSet>& paths,
                                 VertexSet sub) {
  VertexSet unionset;
  for (VertexSet p : paths) {
    if (p.intersects(unionset)) return false;
    if (!induces_path(g, p, sub) || (p & sub).count() != t) return false;
    unionset |= p;
  }
  // No edges between distinct paths.
  std::size_t union_edges = g.edge_count_in(unionset & sub);
  return union_edges == static_cast<std::size_t>(paths.size() * (t - 1));
}

MatchingResult nu_t_bruteforce_in(const Graph& g, int t, VertexSet sub,
                                  const MatchingBudget& budget) {
  if (t < 2) throw ValidationError("nu_t requires t >= 2");
  if (sub.count() > budget.max_vertices)
    throw BudgetError("nu_t_bruteforce: " + std::to_string(sub.count()) +
                      " vertices exceeds the exact-search budget of " +
                      std::to_string(budget.max_vertices));

  // Candidate supports: t-path supports whose induced subgraph is the path
  // itself (a triangle support, say, can never appear in an induced matching).
  std::vector<VertexSet> candidates;
  for (VertexSet p : enumerate_t_paths_in(g, t, sub))
    if (induces_path(g, p, sub)) candidates.push_back(p);
  if (candidates.size() > budget.max_candidates)
    throw BudgetError("nu_t_bruteforce: too many candidate paths");

  std::size_t m = candidates.size();
  std::vector<std::vector<char>> compatible(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      bool ok = !candidates[i].intersects(candidates[j]) &&
                !neighborhood_in(g, candidates[i], false, sub).intersects(candidates[j]);
      compatible[i][j] = compatible[j][i] = ok ? 1 : 0;
    }

  CliqueSearch search;
  search.compatible = &compatible;
  std::vector<int> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<int>(i);
  search.run(all);

  MatchingResult result;
  result.value = static_cast<int>(search.best.size());
  for (int i : search.best) result.witness.push_back(candidates[static_cast<std::size_t>(i)]);
  return result;
}

MatchingResult nu_t_bruteforce(const Graph& g, int t, const MatchingBudget& budget) {
  return nu_t_bruteforce_in(g, t, g.vertices(), budget);
}

namespace {

constexpr int kBruteforceThreshold = 8;

int nu3_component(const Graph& g, VertexSet comp, Nu3Memo& memo);

int nu3_in(const Graph& g, VertexSet sub, Nu3Memo& memo) {
  int total = 0;
  for (VertexSet comp : components_in(g, sub)) total += nu3_component(g, comp, memo);
  return total;
}

int nu3_component(const Graph& g, VertexSet comp, Nu3Memo& memo) {
  if (auto it = memo.find(comp.bits()); it != memo.end()) return it->second;

  int n = comp.count();
  std::size_t edges = g.edge_count_in(comp);
  int max_deg = 0;
  for (int v : comp) max_deg = std::max(max_deg, g.degree_in(v, comp));

  int value;
  if (edges == static_cast<std::size_t>(n) - 1 && max_deg <= 2) {
    value = (n + 1) / 4;  // bare path
  } else if (edges == static_cast<std::size_t>(n) && max_deg == 2 && n >= 4) {
    value = n / 4;  // bare cycle, m >= 4
  } else if (n <= kBruteforceThreshold) {
    value = nu_t_bruteforce_in(g, 3, comp).value;
  } else {
    CycleStructure cs = classify_in(g, comp);
    const ComponentInfo& info = cs.components.front();
    if (info.kind == GraphKind::other)
      throw ValidationError("nu3_recursive: component is neither a tree nor unicyclic");
    if (info.kind == GraphKind::unicyclic && info.cycle.size() == 3) {
      // Triangle cycles fall outside the closed forms; settle them exactly.
      value = nu_t_bruteforce_in(g, 3, comp).value;
    } else {
      auto ctx = deepest_leaf(g, cs);
      if (!ctx)
        throw ValidationError("nu3_recursive: no usable leaf in a non-path component");
      VertexSet g1 = comp - ctx->removed_leaves();
      VertexSet ny0 = neighborhood_in(g, VertexSet::single(ctx->y0), true, comp);
      if (ctx->level >= 2) {
        if (ctx->s() >= 1) {
          value = std::max(nu3_in(g, g1, memo), 1 + nu3_in(g, comp - ny0, memo));
        } else {
          VertexSet g3 = comp - neighborhood_in(
                                    g, VertexSet::single(ctx->y0) | VertexSet::single(ctx->x0),
                                    true, comp);
          value = std::max(nu3_in(g, g1, memo), 1 + nu3_in(g, g3, memo));
        }
      } else {
        if (ctx->s() >= 1) {
          value = std::max(nu3_in(g, g1, memo), 1 + nu3_in(g, comp - ny0, memo));
        } else {
          VertexSet nv1v2 = neighborhood_in(
              g, VertexSet::single(ctx->y0) | VertexSet::single(ctx->v2), true, comp);
          VertexSet nv1vm = neighborhood_in(
              g, VertexSet::single(ctx->y0) | VertexSet::single(ctx->vm), true, comp);
          value = std::max({nu3_in(g, g1, memo), 1 + nu3_in(g, comp - nv1v2, memo),
                            1 + nu3_in(g, comp - nv1vm, memo)});
        }
      }
    }
  }
  memo.emplace(comp.bits(), value);
  return value;
}

}  // namespace

int nu3_recursive_in(const Graph& g, VertexSet sub, Nu3Memo* memo) {
  Nu3Memo local;
  return nu3_in(g, sub, memo ? *memo : local);
}

int nu3_recursive(const Graph& g, const CycleStructure& cs) {
  for (const auto& c : cs.components)
    if (c.kind == GraphKind::other)
      throw ValidationError("nu3_recursive: component is neither a tree nor unicyclic");
  return nu3_recursive_in(g, cs.domain);
}

bool is_3_proximal(const Graph& g, const CycleStructure& cs) {
  if (cs.components.size() != 1 || cs.kind != GraphKind::unicyclic)
    throw ValidationError("is_3_proximal requires a connected unicyclic graph");
  return is_3_proximal_relaxed(g, cs);
}

bool is_3_proximal_relaxed(const Graph& g, const CycleStructure& cs) {
  const ComponentInfo* uc = cs.unique_cycle_component();
  if (!uc || cs.kind != GraphKind::unicyclic)
    throw ValidationError("3-proximality requires exactly one cycle");
  VertexSet boundary = neighborhood_in(g, uc->cycle_mask, false, cs.domain);
  return nu3_recursive_in(g, cs.domain) == nu3_recursive_in(g, cs.domain - boundary);
}

}  // namespace pathideal
