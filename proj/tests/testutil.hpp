#ifndef PATHIDEAL_TESTS_TESTUTIL_HPP
#define PATHIDEAL_TESTS_TESTUTIL_HPP

#include <string>

#include "pathideal/graph.hpp"
#include "pathideal/ideal.hpp"

namespace testutil {

// 23-vertex unicyclic graph: 6-cycle v1..v6, trees hung off v1 and v2,
// deepest leaves z1..z4 under y1 and z5 under y6.
inline constexpr const char* kBigUnicyclic =
    "v1 v2\nv2 v3\nv3 v4\nv4 v5\nv5 v6\nv1 v6\n"
    "v1 x1\nv1 x2\nv1 x3\nv1 x4\nv2 x5\nv2 x6\n"
    "x1 y1\nx1 y2\nx1 y3\nx1 y4\nx5 y5\nx5 y6\n"
    "y1 z1\ny1 z2\ny1 z3\ny1 z4\ny6 z5\n";

// w - x0 - y0 - {z0, z1}
inline constexpr const char* kSpider = "w x0\nx0 y0\ny0 z0\ny0 z1\n";

inline pathideal::Graph big_unicyclic() { return pathideal::parse_edge_list(kBigUnicyclic); }
inline pathideal::Graph spider() { return pathideal::parse_edge_list(kSpider); }

// C6 with a pendant z at v1.
inline pathideal::Graph c6_pendant() {
  return pathideal::parse_edge_list("v1 v2\nv2 v3\nv3 v4\nv4 v5\nv5 v6\nv6 v1\nv1 z\n");
}

// Monomial helper: mask from vertex names.
inline pathideal::VertexSet mono(const pathideal::Graph& g,
                                 std::initializer_list<const char*> names) {
  pathideal::VertexSet m;
  for (const char* name : names) m.add(g.index_of(name));
  return m;
}

inline pathideal::SquarefreeIdeal ideal_of(const pathideal::Graph& g,
                                           std::initializer_list<pathideal::VertexSet> gens) {
  return pathideal::SquarefreeIdeal::from_generators(g.n, gens);
}

}  // namespace testutil

#endif
