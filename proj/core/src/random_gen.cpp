#include "pathideal/random_gen.hpp"

#include <algorithm>
#include <numeric>

#include "pathideal/errors.hpp"

namespace pathideal {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 over a golden-ratio stride
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n <= 0) throw ValidationError("random_tree needs n >= 1");
  if (n == 1) return build_graph(1, {});
  if (n == 2) return build_graph(2, {{0, 1}});

  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
  for (int& a : pruefer) a = pick(rng);

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int a : pruefer) ++degree[static_cast<std::size_t>(a)];

  std::vector<std::pair<int, int>> edges;
  for (int a : pruefer) {
    for (int leaf = 0; leaf < n; ++leaf)
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        edges.emplace_back(leaf, a);
        degree[static_cast<std::size_t>(leaf)] = 0;
        --degree[static_cast<std::size_t>(a)];
        break;
      }
  }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (u < 0)
        u = v;
      else
        edges.emplace_back(u, v);
    }
  return build_graph(n, edges);
}

Graph random_unicyclic(int n, std::mt19937_64& rng) {
  if (n < 3) throw ValidationError("random_unicyclic needs n >= 3");
  Graph tree = random_tree(n, rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (;;) {
    int u = pick(rng), v = pick(rng);
    if (u == v || tree.has_edge(u, v)) continue;
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b : tree.adj[static_cast<std::size_t>(a)])
        if (a < b) edges.emplace_back(a, b);
    edges.emplace_back(std::min(u, v), std::max(u, v));
    return build_graph(n, edges);
  }
}

Graph cycle_with_stalk(int m, int stalk) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(m - 1, 0);
  for (int j = 0; j < stalk; ++j) edges.emplace_back(j == 0 ? 0 : m + j - 1, m + j);
  return build_graph(m + stalk, edges);
}

Graph cycle_with_random_forest(int n, int m, std::mt19937_64& rng) {
  if (m < 3 || m > n) throw ValidationError("cycle_with_random_forest needs 3 <= m <= n");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(m - 1, 0);
  for (int j = m; j < n; ++j) {
    std::uniform_int_distribution<int> pick(0, j - 1);
    edges.emplace_back(pick(rng), j);
  }
  return build_graph(n, edges);
}

SquarefreeIdeal random_squarefree_ideal(int nvars, int max_degree, int gen_count,
                                        std::mt19937_64& rng) {
  if (nvars < 1 || max_degree < 1 || gen_count < 1)
    throw ValidationError("random_squarefree_ideal: bad parameters");
  std::uniform_int_distribution<int> deg(1, std::min(max_degree, nvars));
  std::vector<int> vars(static_cast<std::size_t>(nvars));
  std::iota(vars.begin(), vars.end(), 0);
  std::vector<VertexSet> gens;
  for (int k = 0; k < gen_count; ++k) {
    std::shuffle(vars.begin(), vars.end(), rng);
    VertexSet g;
    int d = deg(rng);
    for (int i = 0; i < d; ++i) g.add(vars[static_cast<std::size_t>(i)]);
    gens.push_back(g);
  }
  return SquarefreeIdeal::from_generators(nvars, std::move(gens));
}

Graph permute_graph(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> names(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) names[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
      g.names[static_cast<std::size_t>(v)];
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[static_cast<std::size_t>(u)])
      if (u < v)
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return build_graph(g.n, edges, std::move(names));
}

}  // namespace pathideal
