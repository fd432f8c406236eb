#include "pathideal/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "pathideal/errors.hpp"

namespace pathideal {

std::size_t Graph::edge_count() const {
  std::size_t deg_sum = 0;
  for (const auto& a : adj) deg_sum += a.size();
  return deg_sum / 2;
}

std::size_t Graph::edge_count_in(VertexSet sub) const {
  std::size_t deg_sum = 0;
  for (int v : sub) deg_sum += static_cast<std::size_t>((adj_mask[v] & sub).count());
  return deg_sum / 2;
}

int Graph::index_of(std::string_view name) const {
  for (int i = 0; i < n; ++i)
    if (names[i] == name) return i;
  return -1;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                  std::vector<std::string> names) {
  if (n < 0 || n > kMaxVertices)
    throw ValidationError("vertex count " + std::to_string(n) + " exceeds the limit of " +
                          std::to_string(kMaxVertices));
  Graph g;
  g.n = n;
  if (names.empty()) {
    g.names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g.names.push_back("v" + std::to_string(i));
  } else {
    g.names = std::move(names);
  }
  g.adj.assign(static_cast<std::size_t>(n), {});
  g.adj_mask.assign(static_cast<std::size_t>(n), VertexSet());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("self-loop at vertex '" + g.names[u] + "'");
    if (g.adj_mask[u].contains(v))
      throw ValidationError("duplicate edge '" + g.names[u] + " " + g.names[v] + "'");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
    g.adj_mask[u].add(v);
    g.adj_mask[v].add(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<int, int>> edges;

  auto intern = [&](const std::string& tok, int line_no) {
    auto it = index.find(tok);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(names.size());
    if (id >= kMaxVertices + 1)
      throw ValidationError("line " + std::to_string(line_no) + ": more than " +
                            std::to_string(kMaxVertices) + " vertices");
    names.push_back(tok);
    index.emplace(tok, id);
    return id;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;  // blank line
    if (!(ls >> b) || (ls >> extra))
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected exactly two tokens 'u v'");
    int ia = intern(a, line_no);
    int ib = intern(b, line_no);
    edges.emplace_back(ia, ib);
  }
  int n = static_cast<int>(names.size());
  return build_graph(n, edges, std::move(names));
}

Graph parse_graph6(std::string_view text) {
  // Strip header, whitespace.
  std::string payload;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) payload.push_back(c);
  constexpr std::string_view header = ">>graph6<<";
  if (payload.rfind(header, 0) == 0) payload.erase(0, header.size());
  if (payload.empty()) throw ValidationError("empty graph6 payload");

  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= payload.size()) throw ValidationError("truncated graph6 payload");
    int c = static_cast<unsigned char>(payload[pos++]);
    if (c < 63 || c > 126) throw ValidationError("invalid graph6 byte");
    return c - 63;
  };

  long long n;
  int c0 = next();
  if (c0 < 63) {
    n = c0;
  } else {
    // '~' prefix: 18-bit count in the next three bytes.
    n = (static_cast<long long>(next()) << 12) | (next() << 6) | next();
  }
  if (n > kMaxVertices)
    throw ValidationError("graph6 graph has " + std::to_string(n) + " vertices, limit is " +
                          std::to_string(kMaxVertices));

  std::vector<std::pair<int, int>> edges;
  int bits_left = 0, cur = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits_left == 0) {
        cur = next();
        bits_left = 6;
      }
      --bits_left;
      if ((cur >> bits_left) & 1) edges.emplace_back(i, j);
    }
  }
  return build_graph(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text) {
  for (std::size_t start = 0; start < text.size();) {
    std::size_t eol = text.find('\n', start);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(start, eol - start);
    start = eol + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    std::string_view body = line.substr(a, b - a + 1);
    bool has_space = body.find_first_of(" \t") != std::string_view::npos;
    return has_space ? parse_edge_list(text) : parse_graph6(text);
  }
  throw ValidationError("empty graph input");
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) {
        out += g.names[u];
        out += ' ';
        out += g.names[v];
        out += '\n';
      }
  return out;
}

Graph make_path(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  return build_graph(m, edges);
}

Graph make_cycle(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  if (m >= 3) edges.emplace_back(m - 1, 0);
  return build_graph(m, edges);
}

VertexSet neighborhood_in(const Graph& g, VertexSet u, bool closed, VertexSet sub) {
  VertexSet out;
  for (int v : u & sub) out |= g.adj_mask[v];
  out &= sub;
  if (closed)
    out |= u & sub;
  else
    out = out - u;
  return out;
}

VertexSet neighborhood(const Graph& g, VertexSet u, bool closed) {
  return neighborhood_in(g, u, closed, g.vertices());
}

std::vector<VertexSet> components_in(const Graph& g, VertexSet sub) {
  std::vector<VertexSet> comps;
  VertexSet left = sub;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.lowest());
    for (;;) {
      VertexSet grown = comp | neighborhood_in(g, comp, true, sub);
      if (grown == comp) break;
      comp = grown;
    }
    comps.push_back(comp);
    left = left - comp;
  }
  return comps;
}

std::vector<VertexSet> components(const Graph& g) { return components_in(g, g.vertices()); }

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  InducedSubgraph out;
  out.from_parent.assign(static_cast<std::size_t>(g.n), -1);
  for (int v : keep) {
    out.from_parent[v] = static_cast<int>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> names;
  for (int v : keep) names.push_back(g.names[v]);
  for (int v : keep)
    for (int w : g.adj_mask[v] & keep)
      if (v < w) edges.emplace_back(out.from_parent[v], out.from_parent[w]);
  out.graph = build_graph(static_cast<int>(out.to_parent.size()), edges, std::move(names));
  return out;
}

namespace {

void extend_path(const Graph& g, VertexSet sub, int last, VertexSet used, int remaining,
                 std::set<VertexSet>& supports) {
  if (remaining == 0) {
    supports.insert(used);
    return;
  }
  for (int w : g.adj_mask[last] & sub) {
    if (used.contains(w)) continue;
    VertexSet next = used;
    next.add(w);
    extend_path(g, sub, w, next, remaining - 1, supports);
  }
}

}  // namespace

std::vector<VertexSet> enumerate_t_paths_in(const Graph& g, int t, VertexSet sub) {
  if (t < 2) throw ValidationError("t-path enumeration requires t >= 2");
  std::set<VertexSet> supports;
  for (int v : sub) extend_path(g, sub, v, VertexSet::single(v), t - 1, supports);
  return {supports.begin(), supports.end()};
}

std::vector<VertexSet> enumerate_t_paths(const Graph& g, int t) {
  return enumerate_t_paths_in(g, t, g.vertices());
}

bool has_t_path(const Graph& g, int t, VertexSet sub) {
  if (t == 3) {
    for (int v : sub)
      if (g.degree_in(v, sub) >= 2) return true;
    return false;
  }
  return !enumerate_t_paths_in(g, t, sub).empty();
}

}  // namespace pathideal
